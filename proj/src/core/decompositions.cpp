#include "mvf/decompositions.hpp"

#include "mvf/errors.hpp"

#include <cmath>
#include <string>

namespace mvf {
namespace {

double relative_residual(const Factorization& f, const Matrix& a) {
  const double scale = a.norm();
  const double err = (f.product() - a).norm();
  return scale > 0.0 ? err / scale : err;
}

void require_square(const Matrix& a, const char* who) {
  if (!is_valid_matrix(a))
    throw Error(ErrorCode::InvalidArgument, std::string(who) + ": invalid matrix");
}

}  // namespace

std::string_view to_string(Decomposition d) {
  switch (d) {
    case Decomposition::QR: return "qr";
    case Decomposition::LDU: return "ldu";
    case Decomposition::Polar: return "polar";
    case Decomposition::Spectral: return "spectral";
    case Decomposition::Cholesky: return "cholesky";
  }
  return "unknown";
}

Decomposition decomposition_from_string(std::string_view name) {
  for (auto d : {Decomposition::QR, Decomposition::LDU, Decomposition::Polar,
                 Decomposition::Spectral, Decomposition::Cholesky})
    if (to_string(d) == name) return d;
  throw Error(ErrorCode::InvalidArgument, "unknown decomposition '" + std::string(name) + "'");
}

Matrix Factorization::product() const {
  Matrix p = factors.front().matrix;
  for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i].matrix;
  return p;
}

Factorization qr_pos(const Matrix& a, const Tolerance& tol) {
  require_square(a, "qr_pos");
  const auto n = a.rows();
  Eigen::HouseholderQR<Matrix> householder(a);
  Matrix q = householder.householderQ() * Matrix::Identity(n, n);
  Matrix r = householder.matrixQR().triangularView<Eigen::Upper>();

  const double threshold = tol.tau_class * a.norm();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(r(i, i)) <= threshold)
      throw Error(ErrorCode::SingularInput, "SingularInput: |R_ii| negligible at i=" +
                  std::to_string(i), static_cast<int>(i));
    if (r(i, i) < 0.0) {
      r.row(i) *= -1.0;
      q.col(i) *= -1.0;
    }
  }

  Factorization f;
  f.orthogonal_det = determinant(q) > 0.0 ? 1 : -1;
  f.factors = {{std::move(q), f.orthogonal_det > 0 ? ClassTag::SO : ClassTag::Orthogonal},
               {std::move(r), ClassTag::UpperTriangularPosDiag}};
  f.residual = relative_residual(f, a);
  return f;
}

Factorization ldu(const Matrix& a, const Tolerance& /*tol*/, double tau_pivot) {
  require_square(a, "ldu");
  const auto n = a.rows();
  Matrix work = a;
  Matrix l = Matrix::Identity(n, n);
  const double threshold = tau_pivot * a.norm();

  for (Eigen::Index k = 0; k < n; ++k) {
    const double pivot = work(k, k);
    if (!(std::abs(pivot) > threshold)) {
      const int order = static_cast<int>(k) + 1;
      throw Error(ErrorCode::ZeroPrincipalMinor,
                  "ZeroPrincipalMinor(" + std::to_string(order) + ")", order);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double m = work(i, k) / pivot;
      l(i, k) = m;
      work.row(i).tail(n - k) -= m * work.row(k).tail(n - k);
      work(i, k) = 0.0;
    }
  }

  Vector d = work.diagonal();
  Matrix u = d.cwiseInverse().asDiagonal() * work;
  u.diagonal().setOnes();
  u.triangularView<Eigen::StrictlyLower>().setZero();

  // D_ii = p_i / p_{i-1}: elimination and minors must agree.
  const auto minors = principal_minors(a);
  double previous = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ratio = minors[static_cast<std::size_t>(i)] / previous;
    previous = minors[static_cast<std::size_t>(i)];
    const double scale = std::max(std::abs(d(i)), std::abs(ratio));
    if (std::abs(d(i) - ratio) > 1e-9 * scale)
      throw Error(ErrorCode::SelfCheckFailed,
                  "ldu: pivot " + std::to_string(i + 1) +
                      " disagrees with principal-minor ratio",
                  static_cast<int>(i) + 1);
  }
  Factorization f;
  f.factors = {{std::move(l), ClassTag::UnitLowerTriangular},
               {Matrix(d.asDiagonal()), ClassTag::DiagonalNonzero},
               {std::move(u), ClassTag::UnitUpperTriangular}};
  f.residual = relative_residual(f, a);
  return f;
}

Factorization polar(const Matrix& a, const Tolerance& /*tol*/) {
  require_square(a, "polar");
  if (!(determinant(a) > 0.0))
    throw Error(ErrorCode::NonPositiveDeterminant, "NonPositiveDeterminant: polar needs det > 0");
  const SymmetricEigen eig = symmetric_eigen(a * a.transpose());
  if (!(eig.values(0) > 0.0))
    throw Error(ErrorCode::SingularInput, "SingularInput: A A^T is not positive definite");
  Matrix p = spectral_map(eig, [](double v) { return std::sqrt(v); });
  Matrix q = spectral_map(eig, [](double v) { return 1.0 / std::sqrt(v); }) * a;

  Factorization f;
  f.factors = {{std::move(p), ClassTag::SPD}, {std::move(q), ClassTag::SO}};
  f.residual = relative_residual(f, a);
  return f;
}

Factorization spectral_sorted(const Matrix& a, const Tolerance& tol) {
  require_square(a, "spectral_sorted");
  if (!check_class(a, ClassTag::SPD, tol))
    throw Error(ErrorCode::NotSPD, "NotSPD: spectral_sorted needs an SPD matrix");
  const auto n = a.rows();
  const SymmetricEigen eig = symmetric_eigen(a);
  Matrix q = eig.vectors.transpose();

  for (Eigen::Index r = 0; r < n; ++r) {
    Eigen::Index best = 0;
    for (Eigen::Index j = 1; j < n; ++j)
      if (std::abs(q(r, j)) > std::abs(q(r, best))) best = j;
    if (q(r, best) < 0.0) q.row(r) *= -1.0;
  }
  if (determinant(q) < 0.0) q.row(n - 1) *= -1.0;

  Factorization f;
  const double gap_floor = 1e-8 * a.norm();
  for (Eigen::Index i = 1; i < n; ++i)
    if (eig.values(i) - eig.values(i - 1) < gap_floor) f.degenerate_spectrum = true;
  f.factors = {{q.transpose(), ClassTag::SO},
               {Matrix(eig.values.asDiagonal()), ClassTag::DiagonalPositive},
               {q, ClassTag::SO}};
  f.residual = relative_residual(f, a);
  return f;
}

Matrix cholesky_factor(const Matrix& a, const Tolerance& tol) {
  require_square(a, "cholesky");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol.tau_class * scale)
    throw Error(ErrorCode::NotSPD, "NotSPD: cholesky input not symmetric");
  Eigen::LLT<Matrix> llt(symmetrize(a));
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::NotSPD, "NotSPD: nonpositive pivot in cholesky");
  Matrix l = llt.matrixL();
  if (!(l.diagonal().minCoeff() > 0.0))
    throw Error(ErrorCode::NotSPD, "NotSPD: nonpositive pivot in cholesky");
  return l;
}

Factorization cholesky(const Matrix& a, const Tolerance& tol) {
  Matrix l = cholesky_factor(a, tol);
  Factorization f;
  Matrix lt = l.transpose();
  f.factors = {{std::move(l), ClassTag::LowerTriangularPosDiag},
               {std::move(lt), ClassTag::UpperTriangularPosDiag}};
  f.residual = relative_residual(f, a);
  return f;
}

Factorization decompose(Decomposition kind, const Matrix& a, const Tolerance& tol) {
  switch (kind) {
    case Decomposition::QR: return qr_pos(a, tol);
    case Decomposition::LDU: return ldu(a, tol);
    case Decomposition::Polar: return polar(a, tol);
    case Decomposition::Spectral: return spectral_sorted(a, tol);
    case Decomposition::Cholesky: return cholesky(a, tol);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown decomposition");
}

}  // namespace mvf
