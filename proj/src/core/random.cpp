#include "mvf/random.hpp"

#include "mvf/errors.hpp"

#include <cmath>

namespace mvf::gen {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Matrix gaussian(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal(rng);
  return g;
}

Matrix so(Eigen::Index n, Rng& rng) {
  const Matrix g = gaussian(n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i)
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  if (determinant(q) < 0.0) q.col(0) *= -1.0;
  return q;
}

Matrix spd(Eigen::Index n, Rng& rng, double spread) {
  const Matrix q = so(n, rng);
  Vector values(n);
  for (Eigen::Index i = 0; i < n; ++i) values(i) = std::exp(uniform(rng, -spread, spread));
  return symmetrize(q * values.asDiagonal() * q.transpose());
}

Matrix skew(Eigen::Index n, Rng& rng, double norm) {
  const Matrix g = gaussian(n, rng);
  Matrix k = 0.5 * (g - g.transpose());
  const double current = k.norm();
  if (current > 0.0) k *= norm / current;
  return k;
}

Matrix positive_det(Eigen::Index n, Rng& rng, double spread) {
  return spd(n, rng, spread) * so(n, rng);
}

Matrix unit_lower(Eigen::Index n, Rng& rng, double scale) {
  Matrix l = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) l(i, j) = uniform(rng, -scale, scale);
  return l;
}

Matrix unit_upper(Eigen::Index n, Rng& rng, double scale) {
  return unit_lower(n, rng, scale).transpose();
}

Matrix lower_pos_diag(Eigen::Index n, Rng& rng) {
  Matrix l = unit_lower(n, rng, 0.5);
  for (Eigen::Index i = 0; i < n; ++i) l(i, i) = std::exp(uniform(rng, -0.5, 0.5));
  return l;
}

Matrix upper_pos_diag(Eigen::Index n, Rng& rng) {
  return lower_pos_diag(n, rng).transpose();
}

Matrix diagonal_positive(Eigen::Index n, Rng& rng, double spread) {
  Vector d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = std::exp(uniform(rng, -spread, spread));
  return d.asDiagonal();
}

Matrix with_minor_pattern(Eigen::Index n, Rng& rng, const std::vector<int>& signs) {
  if (static_cast<Eigen::Index>(signs.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "with_minor_pattern: sign count != n");
  Vector d(n);
  for (Eigen::Index i = 0; i < n; ++i)
    d(i) = (signs[static_cast<std::size_t>(i)] < 0 ? -1.0 : 1.0) *
           std::exp(uniform(rng, -0.5, 0.5));
  return unit_lower(n, rng) * d.asDiagonal() * unit_upper(n, rng);
}

Matrix with_nonzero_minors(Eigen::Index n, Rng& rng) {
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (auto& s : signs) s = uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1;
  return with_minor_pattern(n, rng, signs);
}

Matrix in_class(ClassTag tag, Eigen::Index n, Rng& rng) {
  switch (tag) {
    case ClassTag::GeneralInvertible: return positive_det(n, rng);
    case ClassTag::SPD: return spd(n, rng);
    case ClassTag::SO: return so(n, rng);
    case ClassTag::Orthogonal: return so(n, rng);
    case ClassTag::UnitLowerTriangular: return unit_lower(n, rng);
    case ClassTag::UnitUpperTriangular: return unit_upper(n, rng);
    case ClassTag::UpperTriangularPosDiag: return upper_pos_diag(n, rng);
    case ClassTag::LowerTriangularPosDiag: return lower_pos_diag(n, rng);
    case ClassTag::Diagonal:
    case ClassTag::DiagonalNonzero:
    case ClassTag::DiagonalPositive: return diagonal_positive(n, rng);
    case ClassTag::PositiveScalar1x1: return diagonal_positive(1, rng);
  }
  throw Error(ErrorCode::InvalidArgument, "in_class: unknown class");
}

Matrix perturb_in_class(ClassTag tag, const Matrix& a, double eps, Rng& rng) {
  const auto n = a.rows();
  switch (tag) {
    case ClassTag::SPD: {
      Matrix s = symmetrize(gaussian(n, rng));
      s *= eps / s.norm();
      const Matrix half = spd_sqrt(a);
      return symmetrize(half * spd_exp(s) * half);
    }
    case ClassTag::SO:
    case ClassTag::Orthogonal:
      return a * so_exp(skew(n, rng, eps));
    case ClassTag::Diagonal:
    case ClassTag::DiagonalNonzero:
    case ClassTag::DiagonalPositive:
    case ClassTag::PositiveScalar1x1: {
      Matrix b = a;
      for (Eigen::Index i = 0; i < n; ++i)
        b(i, i) *= std::exp(eps * uniform(rng, -1.0, 1.0));
      return b;
    }
    case ClassTag::UnitLowerTriangular:
    case ClassTag::UnitUpperTriangular:
    case ClassTag::UpperTriangularPosDiag:
    case ClassTag::LowerTriangularPosDiag:
    case ClassTag::GeneralInvertible: {
      Matrix e = gaussian(n, rng);
      if (tag == ClassTag::UnitLowerTriangular) e = e.triangularView<Eigen::StrictlyLower>();
      if (tag == ClassTag::UnitUpperTriangular) e = e.triangularView<Eigen::StrictlyUpper>();
      if (tag == ClassTag::LowerTriangularPosDiag) e = e.triangularView<Eigen::Lower>();
      if (tag == ClassTag::UpperTriangularPosDiag) e = e.triangularView<Eigen::Upper>();
      return a + (eps / e.norm()) * e;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "perturb_in_class: unknown class");
}

std::vector<Matrix> walk(ClassTag tag, Eigen::Index n, std::size_t count, double eps, Rng& rng) {
  std::vector<Matrix> out;
  if (count == 0) return out;
  if (tag == ClassTag::GeneralInvertible) {
    const auto p = walk(ClassTag::SPD, n, count, eps, rng);
    const auto q = walk(ClassTag::SO, n, count, eps, rng);
    for (std::size_t i = 0; i < count; ++i) out.push_back(p[i] * q[i]);
    return out;
  }
  out.push_back(in_class(tag, n, rng));
  while (out.size() < count) {
    Matrix next = perturb_in_class(tag, out.back(), eps, rng);
    for (int tries = 0; !check_class(next, tag).ok && tries < 100; ++tries)
      next = perturb_in_class(tag, out.back(), eps, rng);
    if (!check_class(next, tag).ok)
      throw Error(ErrorCode::InvalidArgument, "walk: cannot stay inside the class");
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace mvf::gen
