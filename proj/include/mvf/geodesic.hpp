#pragma once

#include "mvf/decompositions.hpp"
#include "mvf/matrix.hpp"

#include <functional>
#include <memory>

namespace mvf {

// A path gamma: [0, 1] -> class with gamma(0) = A, gamma(1) = B satisfying
// d(gamma(s), B) = (1 - s) d(A, B) for the class metric.
class Geodesic {
 public:
  Geodesic(Matrix start, Matrix end, ClassTag tag, std::function<Matrix(double)> eval);

  // Endpoints are returned exactly at s = 0 and s = 1.
  Matrix operator()(double s) const;

  const Matrix& start() const noexcept { return start_; }
  const Matrix& end() const noexcept { return end_; }
  ClassTag tag() const noexcept { return tag_; }

 private:
  Matrix start_;
  Matrix end_;
  ClassTag tag_;
  std::function<Matrix(double)> eval_;
};

// SPD:           A^{1/2} (A^{-1/2} B A^{-1/2})^s A^{1/2}
// SO:            A exp(s log(A^T B))
// DiagonalPositive / PositiveScalar1x1: elementwise A^{1-s} B^s
// Unit triangular: A exp(s log(A^{-1} B)) on the unipotent group
Geodesic geodesic(ClassTag tag, const Matrix& a, const Matrix& b, const Tolerance& tol = {});

// gamma(s) = gamma_1(s) gamma_2(s) over the factors of a two-factor
// decomposition (polar: SPD x SO).
Geodesic product_geodesic(Decomposition decomposition, const Matrix& a, const Matrix& b,
                          const Tolerance& tol = {});

bool has_geodesic(ClassTag tag);

}  // namespace mvf
