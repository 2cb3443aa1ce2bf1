#include "mvf/matrix.hpp"

#include "mvf/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

namespace mvf {
namespace {

struct TagName {
  ClassTag tag;
  std::string_view name;
  std::string_view snake;
};

constexpr std::array<TagName, 12> kTagNames{{
    {ClassTag::GeneralInvertible, "GeneralInvertible", "general_invertible"},
    {ClassTag::SPD, "SPD", "spd"},
    {ClassTag::SO, "SO", "so"},
    {ClassTag::Orthogonal, "Orthogonal", "orthogonal"},
    {ClassTag::UnitLowerTriangular, "UnitLowerTriangular", "unit_lower_triangular"},
    {ClassTag::UnitUpperTriangular, "UnitUpperTriangular", "unit_upper_triangular"},
    {ClassTag::UpperTriangularPosDiag, "UpperTriangularPosDiag", "upper_triangular_pos_diag"},
    {ClassTag::LowerTriangularPosDiag, "LowerTriangularPosDiag", "lower_triangular_pos_diag"},
    {ClassTag::Diagonal, "Diagonal", "diagonal"},
    {ClassTag::DiagonalNonzero, "DiagonalNonzero", "diagonal_nonzero"},
    {ClassTag::DiagonalPositive, "DiagonalPositive", "diagonal_positive"},
    {ClassTag::PositiveScalar1x1, "PositiveScalar1x1", "positive_scalar"},
}};

double entry_scale(const Matrix& a) {
  return std::max(1.0, a.cwiseAbs().maxCoeff());
}

ClassCheck fail(std::string why) { return ClassCheck{false, std::move(why)}; }

// Largest |a_ij| over entries outside the allowed pattern.
template <typename Allowed>
double max_off_pattern(const Matrix& a, Allowed allowed) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!allowed(i, j)) worst = std::max(worst, std::abs(a(i, j)));
  return worst;
}

ClassCheck check_triangular(const Matrix& a, bool lower, const Tolerance& tol) {
  const double off = lower
      ? max_off_pattern(a, [](auto i, auto j) { return j <= i; })
      : max_off_pattern(a, [](auto i, auto j) { return j >= i; });
  if (off > tol.tau_class * entry_scale(a))
    return fail(lower ? "nonzero entry above diagonal" : "nonzero entry below diagonal");
  return {};
}

ClassCheck check_diagonal(const Matrix& a, const Tolerance& tol) {
  if (max_off_pattern(a, [](auto i, auto j) { return i == j; }) >
      tol.tau_class * entry_scale(a))
    return fail("nonzero off-diagonal entry");
  return {};
}

ClassCheck check_orthogonal(const Matrix& a, const Tolerance& tol) {
  const auto n = a.rows();
  if ((a.transpose() * a - Matrix::Identity(n, n)).norm() > tol.tau_class)
    return fail("not orthogonal");
  return {};
}

// acos(c)/sqrt(1-c^2) = theta/sin(theta), analytic on (-1, 1].
double theta_over_sin(double c) {
  c = std::clamp(c, -1.0, 1.0);
  const double one_minus = 1.0 - c;
  if (one_minus < 1e-8) return 1.0 + one_minus / 3.0;
  return std::acos(c) / std::sqrt((1.0 - c) * (1.0 + c));
}

void require_skew(const Matrix& x, const Tolerance& tol) {
  if (!is_valid_matrix(x))
    throw Error(ErrorCode::NotSkew, "not skew-symmetric: invalid matrix");
  if ((x + x.transpose()).cwiseAbs().maxCoeff() > tol.tau_class * entry_scale(x))
    throw Error(ErrorCode::NotSkew, "not skew-symmetric");
}

void require_so_for_log(const Matrix& q, const Tolerance& tol) {
  if (auto c = check_class(q, ClassTag::SO, tol); !c)
    throw Error(ErrorCode::ClassViolation, "so_log: " + c.diagnostic);
}

[[noreturn]] void branch_failure() {
  throw Error(ErrorCode::LogBranchFailure,
              "LogBranchFailure: rotation has eigenvalue -1 (rotation by pi); "
              "re-parameterize or densify the samples");
}

Matrix skew_part(const Matrix& x) { return 0.5 * (x - x.transpose()); }

Matrix so_log_2(const Matrix& q, const Tolerance& tol) {
  const double theta = std::atan2(q(1, 0) - q(0, 1), q(0, 0) + q(1, 1));
  if (2.0 * std::abs(std::cos(0.5 * theta)) <= tol.tau_class) branch_failure();
  Matrix x(2, 2);
  x << 0.0, -theta, theta, 0.0;
  return x;
}

Matrix so_exp_2(const Matrix& x) {
  return planar_rotation(0.5 * (x(1, 0) - x(0, 1)));
}

Eigen::Vector3d vee3(const Matrix& k) {
  return {k(2, 1), k(0, 2), k(1, 0)};
}

Matrix hat3(const Eigen::Vector3d& w) {
  Matrix k(3, 3);
  k << 0.0, -w.z(), w.y(), w.z(), 0.0, -w.x(), -w.y(), w.x(), 0.0;
  return k;
}

}  // namespace

std::string_view to_string(ClassTag tag) {
  for (const auto& t : kTagNames)
    if (t.tag == tag) return t.name;
  return "Unknown";
}

ClassTag class_tag_from_string(std::string_view name) {
  for (const auto& t : kTagNames)
    if (t.name == name || t.snake == name) return t.tag;
  throw Error(ErrorCode::InvalidArgument, "unknown class tag '" + std::string(name) + "'");
}

double frobenius_norm(const Matrix& a) {
  return std::sqrt((a * a.transpose()).trace());
}

bool is_valid_matrix(const Matrix& a) {
  return a.rows() >= 1 && a.rows() == a.cols() && a.allFinite();
}

ClassCheck check_class(const Matrix& a, ClassTag tag, const Tolerance& tol) {
  if (a.rows() < 1 || a.rows() != a.cols()) return fail("not square");
  if (!a.allFinite()) return fail("non-finite entry");
  const auto n = a.rows();

  switch (tag) {
    case ClassTag::GeneralInvertible: {
      Eigen::PartialPivLU<Matrix> lu(a);
      const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
      if (pivot <= tol.boundary * std::max(a.norm(), 1e-300)) return fail("singular");
      return {};
    }
    case ClassTag::SPD: {
      if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol.tau_class * entry_scale(a))
        return fail("not symmetric");
      if (symmetric_eigen(a).values(0) <= tol.boundary) return fail("not positive definite");
      return {};
    }
    case ClassTag::SO: {
      if (auto c = check_orthogonal(a, tol); !c) return c;
      if (std::abs(determinant(a) - 1.0) > tol.tau_class) return fail("determinant not 1");
      return {};
    }
    case ClassTag::Orthogonal:
      return check_orthogonal(a, tol);
    case ClassTag::UnitLowerTriangular:
    case ClassTag::UnitUpperTriangular: {
      if (auto c = check_triangular(a, tag == ClassTag::UnitLowerTriangular, tol); !c) return c;
      if ((a.diagonal().array() - 1.0).abs().maxCoeff() > tol.tau_class)
        return fail("diagonal not unit");
      return {};
    }
    case ClassTag::UpperTriangularPosDiag:
    case ClassTag::LowerTriangularPosDiag: {
      if (auto c = check_triangular(a, tag == ClassTag::LowerTriangularPosDiag, tol); !c)
        return c;
      if (a.diagonal().minCoeff() <= tol.boundary) return fail("nonpositive diagonal entry");
      return {};
    }
    case ClassTag::Diagonal:
      return check_diagonal(a, tol);
    case ClassTag::DiagonalNonzero: {
      if (auto c = check_diagonal(a, tol); !c) return c;
      if (a.diagonal().cwiseAbs().minCoeff() <= tol.boundary) return fail("zero diagonal entry");
      return {};
    }
    case ClassTag::DiagonalPositive: {
      if (auto c = check_diagonal(a, tol); !c) return c;
      if (a.diagonal().minCoeff() <= tol.boundary) return fail("nonpositive diagonal entry");
      return {};
    }
    case ClassTag::PositiveScalar1x1: {
      if (n != 1) return fail("not 1x1");
      if (a(0, 0) <= tol.boundary) return fail("nonpositive scalar");
      return {};
    }
  }
  return fail("unknown class");
}

void require_class(const Matrix& a, ClassTag tag, const Tolerance& tol) {
  if (auto c = check_class(a, tag, tol); !c)
    throw Error(ErrorCode::ClassViolation,
                std::string(to_string(tag)) + " check failed: " + c.diagnostic);
}

std::vector<double> principal_minors(const Matrix& a) {
  const auto n = a.rows();
  std::vector<double> minors;
  minors.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 1; k <= n; ++k)
    minors.push_back(determinant(a.topLeftCorner(k, k)));
  return minors;
}

double determinant(const Matrix& a) {
  if (a.rows() == 1) return a(0, 0);
  return Eigen::PartialPivLU<Matrix>(a).determinant();
}

Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.transpose()); }

SymmetricEigen symmetric_eigen(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(a));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix spd_sqrt(const Matrix& a, const Tolerance& tol) {
  if (!check_class(a, ClassTag::SPD, tol)) throw Error(ErrorCode::NotSPD, "spd_sqrt: not SPD");
  return spectral_map(symmetric_eigen(a), [](double v) { return std::sqrt(v); });
}

Matrix spd_inv_sqrt(const Matrix& a, const Tolerance& tol) {
  if (!check_class(a, ClassTag::SPD, tol))
    throw Error(ErrorCode::NotSPD, "spd_inv_sqrt: not SPD");
  return spectral_map(symmetric_eigen(a), [](double v) { return 1.0 / std::sqrt(v); });
}

Matrix spd_log(const Matrix& a, const Tolerance& tol) {
  if (!check_class(a, ClassTag::SPD, tol)) throw Error(ErrorCode::NotSPD, "spd_log: not SPD");
  return spectral_map(symmetric_eigen(a), [](double v) { return std::log(v); });
}

Matrix spd_exp(const Matrix& x, const Tolerance& tol) {
  if (!is_valid_matrix(x) ||
      (x - x.transpose()).cwiseAbs().maxCoeff() > tol.tau_class * entry_scale(x))
    throw Error(ErrorCode::NotSymmetric, "spd_exp: not symmetric");
  return spectral_map(symmetric_eigen(x), [](double v) { return std::exp(v); });
}

Matrix spd_pow(const Matrix& a, double p, const Tolerance& tol) {
  if (!check_class(a, ClassTag::SPD, tol)) throw Error(ErrorCode::NotSPD, "spd_pow: not SPD");
  return spectral_map(symmetric_eigen(a), [p](double v) { return std::pow(v, p); });
}

Matrix so_log(const Matrix& q, const Tolerance& tol) {
  require_so_for_log(q, tol);
  if (q.rows() == 1) return Matrix::Zero(1, 1);
  if (q.rows() == 2) return so_log_2(q, tol);
  if (q.rows() == 3) {
    const Eigen::Vector3d w = vee3(skew_part(q));
    const double s = w.norm();
    const double c = 0.5 * (q.trace() - 1.0);
    const double theta = std::atan2(s, c);
    // Near pi the axis is ill-determined from the skew part alone.
    if (theta <= 3.0) {
      const double factor = s < 1e-8 ? 1.0 + theta * theta / 6.0 : theta / s;
      return hat3(factor * w);
    }
  }
  return so_log_general(q, tol);
}

Matrix so_log_general(const Matrix& q, const Tolerance& tol) {
  require_so_for_log(q, tol);
  const Matrix k = skew_part(q);
  const SymmetricEigen eig = symmetric_eigen(symmetrize(q));
  // |lambda + 1| = sqrt(2 (1 + c)) for the eigenvalue pair with cos = c.
  const double c_min = std::clamp(eig.values(0), -1.0, 1.0);
  if (std::sqrt(2.0 * (1.0 + c_min)) <= tol.tau_class) branch_failure();
  const Matrix g = spectral_map(eig, theta_over_sin);
  return skew_part(g * k);
}

Matrix so_exp(const Matrix& x, const Tolerance& tol) {
  require_skew(x, tol);
  if (x.rows() == 1) return Matrix::Ones(1, 1);
  if (x.rows() == 2) return so_exp_2(x);
  if (x.rows() == 3) {
    const Matrix k = skew_part(x);
    const double theta = vee3(k).norm();
    double a, b;  // sin(t)/t, (1 - cos(t))/t^2
    if (theta < 1e-6) {
      const double t2 = theta * theta;
      a = 1.0 - t2 / 6.0;
      b = 0.5 - t2 / 24.0;
    } else {
      a = std::sin(theta) / theta;
      b = (1.0 - std::cos(theta)) / (theta * theta);
    }
    return Matrix::Identity(3, 3) + a * k + b * (k * k);
  }
  return so_exp_general(x);
}

Matrix so_exp_general(const Matrix& x) {
  const Matrix k = skew_part(x);
  const SymmetricEigen eig = symmetric_eigen(-(k * k));
  const Matrix cos_part = spectral_map(eig, [](double s) {
    return std::cos(std::sqrt(std::max(s, 0.0)));
  });
  const Matrix sinc_part = spectral_map(eig, [](double s) {
    const double r = std::sqrt(std::max(s, 0.0));
    return r < 1e-8 ? 1.0 - s / 6.0 : std::sin(r) / r;
  });
  return cos_part + k * sinc_part;
}

Matrix unipotent_log(const Matrix& a) {
  const auto n = a.rows();
  const Matrix nil = a - Matrix::Identity(n, n);
  Matrix result = Matrix::Zero(n, n);
  Matrix power = nil;
  for (Eigen::Index k = 1; k < n; ++k) {
    result += ((k % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(k) * power;
    power = power * nil;
  }
  return result;
}

Matrix unipotent_exp(const Matrix& x) {
  const auto n = x.rows();
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (Eigen::Index k = 1; k < n; ++k) {
    term = term * x / static_cast<double>(k);
    result += term;
  }
  return result;
}

Matrix planar_rotation(double theta) {
  Matrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

}  // namespace mvf
