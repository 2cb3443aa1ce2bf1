#pragma once

#include "mvf/matrix.hpp"

#include <vector>

namespace mvf {

// The input sequence: strictly increasing abscissae paired with matrices of
// one order, all passing one class tag. Validated on construction.
class ParamSamples {
 public:
  ParamSamples(std::vector<double> t, std::vector<Matrix> matrices, ClassTag tag,
               const Tolerance& tol = {});

  const std::vector<double>& t() const noexcept { return t_; }
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
  const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
  ClassTag tag() const noexcept { return tag_; }
  const Tolerance& tolerance() const noexcept { return tol_; }
  std::size_t size() const noexcept { return t_.size(); }
  Eigen::Index order() const noexcept { return matrices_.front().rows(); }
  double t_min() const noexcept { return t_.front(); }
  double t_max() const noexcept { return t_.back(); }
  // h = max_i (t_{i+1} - t_i); zero for a single sample.
  double mesh_width() const noexcept;

 private:
  std::vector<double> t_;
  std::vector<Matrix> matrices_;
  ClassTag tag_;
  Tolerance tol_;
};

// Interval i with t_i <= t <= t_{i+1} and the local parameter in [0, 1].
struct IntervalLocation {
  std::size_t interval;
  double local;
};
IntervalLocation locate(const std::vector<double>& t, double x);

// n equally spaced points on [a, b] including both endpoints.
std::vector<double> uniform_grid(double a, double b, std::size_t n);

}  // namespace mvf
