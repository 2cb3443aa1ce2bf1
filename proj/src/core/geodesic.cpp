#include "mvf/geodesic.hpp"

#include "mvf/errors.hpp"

#include <cmath>
#include <string>

namespace mvf {

Geodesic::Geodesic(Matrix start, Matrix end, ClassTag tag, std::function<Matrix(double)> eval)
    : start_(std::move(start)), end_(std::move(end)), tag_(tag), eval_(std::move(eval)) {}

Matrix Geodesic::operator()(double s) const {
  if (s == 0.0) return start_;
  if (s == 1.0) return end_;
  return eval_(s);
}

bool has_geodesic(ClassTag tag) {
  switch (tag) {
    case ClassTag::SPD:
    case ClassTag::SO:
    case ClassTag::DiagonalPositive:
    case ClassTag::PositiveScalar1x1:
    case ClassTag::UnitLowerTriangular:
    case ClassTag::UnitUpperTriangular:
      return true;
    default:
      return false;
  }
}

Geodesic geodesic(ClassTag tag, const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::ClassMismatch, "geodesic: endpoint orders differ");
  require_class(a, tag, tol);
  require_class(b, tag, tol);

  switch (tag) {
    case ClassTag::SPD: {
      const SymmetricEigen ea = symmetric_eigen(a);
      Matrix half = spectral_map(ea, [](double v) { return std::sqrt(v); });
      const Matrix inv_half = spectral_map(ea, [](double v) { return 1.0 / std::sqrt(v); });
      auto inner = std::make_shared<const SymmetricEigen>(symmetric_eigen(inv_half * b * inv_half));
      return Geodesic(a, b, tag, [half = std::move(half), inner](double s) {
        const Matrix power = spectral_map(*inner, [s](double v) { return std::pow(v, s); });
        return symmetrize(half * power * half);
      });
    }
    case ClassTag::SO: {
      Matrix x = so_log(a.transpose() * b, tol);
      return Geodesic(a, b, tag, [a, x = std::move(x)](double s) {
        return Matrix(a * so_exp(s * x));
      });
    }
    case ClassTag::DiagonalPositive:
    case ClassTag::PositiveScalar1x1: {
      Vector log_a = a.diagonal().array().log();
      Vector log_b = b.diagonal().array().log();
      return Geodesic(a, b, tag, [log_a = std::move(log_a), log_b = std::move(log_b)](double s) {
        const Vector v = ((1.0 - s) * log_a + s * log_b).array().exp();
        return Matrix(v.asDiagonal());
      });
    }
    case ClassTag::UnitLowerTriangular:
    case ClassTag::UnitUpperTriangular: {
      const bool lower = tag == ClassTag::UnitLowerTriangular;
      Matrix a_inv = lower ? Matrix(a.triangularView<Eigen::UnitLower>().solve(
                                Matrix::Identity(a.rows(), a.cols())))
                           : Matrix(a.triangularView<Eigen::UnitUpper>().solve(
                                Matrix::Identity(a.rows(), a.cols())));
      Matrix x = unipotent_log(a_inv * b);
      return Geodesic(a, b, tag, [a, x = std::move(x)](double s) {
        return Matrix(a * unipotent_exp(s * x));
      });
    }
    default:
      throw Error(ErrorCode::ClassMismatch,
                  "geodesic: no closed-form geodesic for class " + std::string(to_string(tag)));
  }
}

Geodesic product_geodesic(Decomposition decomposition, const Matrix& a, const Matrix& b,
                          const Tolerance& tol) {
  const Factorization fa = decompose(decomposition, a, tol);
  const Factorization fb = decompose(decomposition, b, tol);
  if (fa.factors.size() != fb.factors.size())
    throw Error(ErrorCode::ClassMismatch, "product_geodesic: factor structures differ");

  std::vector<Geodesic> parts;
  for (std::size_t j = 0; j < fa.factors.size(); ++j) {
    if (fa.factors[j].tag != fb.factors[j].tag)
      throw Error(ErrorCode::ClassMismatch, "product_geodesic: factor classes differ");
    parts.push_back(geodesic(fa.factors[j].tag, fa.factors[j].matrix, fb.factors[j].matrix, tol));
  }
  return Geodesic(a, b, ClassTag::GeneralInvertible, [parts = std::move(parts)](double s) {
    Matrix m = parts.front()(s);
    for (std::size_t j = 1; j < parts.size(); ++j) m = m * parts[j](s);
    return m;
  });
}

}  // namespace mvf
