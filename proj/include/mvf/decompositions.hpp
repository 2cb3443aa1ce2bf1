#pragma once

#include "mvf/matrix.hpp"

#include <string_view>
#include <vector>

namespace mvf {

enum class Decomposition { QR, LDU, Polar, Spectral, Cholesky };

std::string_view to_string(Decomposition d);
Decomposition decomposition_from_string(std::string_view name);

struct Factor {
  Matrix matrix;
  ClassTag tag;
};

// Ordered factors whose product reconstructs the input. For Cholesky the
// factors are (L, L^T); for the spectral decomposition (Q^T, D, Q).
struct Factorization {
  std::vector<Factor> factors;
  double residual = 0.0;  // ||prod - A||_F / ||A||_F
  // spectral only: two eigenvalues closer than 1e-8 ||A||_F, so the
  // orthogonal factor is not unique.
  bool degenerate_spectrum = false;
  // qr only: det(Q); Q is tagged SO when +1 and Orthogonal when -1.
  int orthogonal_det = 1;

  Matrix product() const;
};

// A = Q R with diag(R) > 0. Rejects |R_ii| <= tau_class ||A||_F.
Factorization qr_pos(const Matrix& a, const Tolerance& tol = {});

inline constexpr double kDefaultPivotTolerance = 1e-12;

// A = L D U by elimination without pivoting; D_ii = p_i / p_{i-1}.
// Throws ZeroPrincipalMinor(i) (1-based) when pivot i is negligible.
Factorization ldu(const Matrix& a, const Tolerance& tol = {},
                  double tau_pivot = kDefaultPivotTolerance);

// A = P Q with P = (A A^T)^{1/2} SPD and Q = P^{-1} A in SO(n).
Factorization polar(const Matrix& a, const Tolerance& tol = {});

// A = Q^T D Q with ascending diag(D). Each row of Q has its largest-magnitude
// entry positive (lowest column on ties); the last row is negated if needed
// to make det(Q) = +1.
Factorization spectral_sorted(const Matrix& a, const Tolerance& tol = {});

// A = L L^T with diag(L) > 0.
Factorization cholesky(const Matrix& a, const Tolerance& tol = {});
// Just the factor; used on hot evaluation paths.
Matrix cholesky_factor(const Matrix& a, const Tolerance& tol = {});

Factorization decompose(Decomposition kind, const Matrix& a, const Tolerance& tol = {});

}  // namespace mvf
