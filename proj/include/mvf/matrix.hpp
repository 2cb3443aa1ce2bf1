#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace mvf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class ClassTag {
  GeneralInvertible,
  SPD,
  SO,
  Orthogonal,
  UnitLowerTriangular,
  UnitUpperTriangular,
  UpperTriangularPosDiag,
  LowerTriangularPosDiag,
  Diagonal,
  DiagonalNonzero,
  DiagonalPositive,
  PositiveScalar1x1,
};

std::string_view to_string(ClassTag tag);
// Accepts the enumerator spelling ("SPD", "UnitLowerTriangular", ...) and the
// snake_case spelling ("spd", "unit_lower_triangular", ...).
ClassTag class_tag_from_string(std::string_view name);

// tau_class bounds residual-type conditions (symmetry, orthogonality,
// off-pattern entries, unit diagonals). Strict positivity / invertibility is
// tested against `boundary`, which does not move with tau_class so that
// acceptance stays monotone in tau_class.
struct Tolerance {
  double tau_class = 1e-10;
  double boundary = 1e-10;
};

struct ClassCheck {
  bool ok = true;
  std::string diagnostic;  // first violated condition, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

double frobenius_norm(const Matrix& a);

// Entries finite and the matrix square with n >= 1.
bool is_valid_matrix(const Matrix& a);

ClassCheck check_class(const Matrix& a, ClassTag tag, const Tolerance& tol = {});

// Throws Error{ClassViolation} carrying the diagnostic.
void require_class(const Matrix& a, ClassTag tag, const Tolerance& tol = {});

// Leading principal minors p_1..p_n.
std::vector<double> principal_minors(const Matrix& a);

double determinant(const Matrix& a);

Matrix symmetrize(const Matrix& a);

/// Symmetric eigendecomposition a = V diag(lambda) V^T with ascending lambda.
struct SymmetricEigen {
  Vector values;
  Matrix vectors;
};
SymmetricEigen symmetric_eigen(const Matrix& a);

// Applies f to the spectrum of a symmetric matrix.
template <typename F>
Matrix spectral_map(const SymmetricEigen& eig, F&& f) {
  Vector mapped(eig.values.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = f(eig.values(i));
  return symmetrize(eig.vectors * mapped.asDiagonal() * eig.vectors.transpose());
}

Matrix spd_sqrt(const Matrix& a, const Tolerance& tol = {});
Matrix spd_inv_sqrt(const Matrix& a, const Tolerance& tol = {});
Matrix spd_log(const Matrix& a, const Tolerance& tol = {});
Matrix spd_exp(const Matrix& x, const Tolerance& tol = {});
// a^p through the eigen-power; exact on commuting inputs.
Matrix spd_pow(const Matrix& a, double p, const Tolerance& tol = {});

// Principal logarithm on SO(n). Throws LogBranchFailure when Q has an
// eigenvalue within tau_class of -1.
Matrix so_log(const Matrix& q, const Tolerance& tol = {});
Matrix so_exp(const Matrix& x, const Tolerance& tol = {});

// General-n paths. Q = C + K with C = (Q+Q^T)/2 and K = (Q-Q^T)/2 commuting,
// so log Q = g(C) K with g(c) = acos(c)/sqrt(1-c^2); symmetrically
// exp X = cos(sqrt(S)) + X sinc(sqrt(S)) with S = -X^2. so_log/so_exp use
// closed forms for n <= 3 and these otherwise.
Matrix so_log_general(const Matrix& q, const Tolerance& tol = {});
Matrix so_exp_general(const Matrix& x);

// Unipotent (unit triangular) group: the nilpotent series terminate after n
// terms, so these are exact polynomials.
Matrix unipotent_log(const Matrix& a);
Matrix unipotent_exp(const Matrix& x);

Matrix planar_rotation(double theta);

}  // namespace mvf
