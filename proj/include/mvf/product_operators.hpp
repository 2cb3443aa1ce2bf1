#pragma once

#include "mvf/decompositions.hpp"
#include "mvf/operators.hpp"

#include <vector>

namespace mvf {

// Decomposes every sample once, runs factor_ops[j] on the j-th factor
// sequence, and multiplies the factor curves pointwise. Polar and QR take two
// operators, LDU three; Spectral delegates to spectral_conjugation_operator
// with (s1 on SO, s2 on the eigenvalue diagonals).
Curve product_operator(Decomposition decomposition, const std::vector<OperatorSpec>& factor_ops,
                       const ParamSamples& samples);

// Gamma(t) = Q(t)^T D(t) Q(t). Samples with a degenerate spectrum attach a
// warning to the curve instead of failing.
Curve spectral_conjugation_operator(const OperatorSpec& rotation_op,
                                    const OperatorSpec& eigenvalue_op,
                                    const ParamSamples& samples);

// Signs of the leading principal minors, each +1 or -1 (0 for a zero minor).
std::vector<int> minor_sign_vector(const Matrix& a);

// Gamma(t) = L(t) D(t) U(t). Rejects sequences whose minor-sign vectors differ
// (no continuous interpolant can keep the minors nonzero).
Curve ldu_sign_preserving_operator(const OperatorSpec& lower_op, const OperatorSpec& diagonal_op,
                                   const OperatorSpec& upper_op, const ParamSamples& samples);
// Unipotent log-exp for both triangular factors and a log-linear positive
// scalar operator inside the sign-preserving diagonal operator.
Curve ldu_sign_preserving_operator(const ParamSamples& samples);

// Product-data approach for lower-triangular data: A_i = L_i L_i^T, run
// spd_op on {A_i}, map back with the Cholesky factor.
Curve cholesky_product_data(const OperatorSpec& spd_op, const ParamSamples& samples);

}  // namespace mvf
