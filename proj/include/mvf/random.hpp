#pragma once

#include "mvf/matrix.hpp"

#include <cstdint>
#include <random>

// Seeded generators of valid inputs for each matrix class. Used by the check
// suites, the majorization probe, and the test corpus.
namespace mvf::gen {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

double uniform(Rng& rng, double lo, double hi);
Matrix gaussian(Eigen::Index n, Rng& rng);

// Q diag(exp(u)) Q^T with u uniform in [-spread, spread].
Matrix spd(Eigen::Index n, Rng& rng, double spread = 1.0);
// Haar-distributed rotation (QR of a Gaussian, sign and det fixed).
Matrix so(Eigen::Index n, Rng& rng);
// Skew matrix with Gaussian entries scaled so that ||X||_F = norm.
Matrix skew(Eigen::Index n, Rng& rng, double norm);
// P Q with P from spd() and Q from so(): det > 0 and well conditioned.
Matrix positive_det(Eigen::Index n, Rng& rng, double spread = 1.0);
Matrix unit_lower(Eigen::Index n, Rng& rng, double scale = 0.5);
Matrix unit_upper(Eigen::Index n, Rng& rng, double scale = 0.5);
Matrix lower_pos_diag(Eigen::Index n, Rng& rng);
Matrix upper_pos_diag(Eigen::Index n, Rng& rng);
Matrix diagonal_positive(Eigen::Index n, Rng& rng, double spread = 1.0);
// L D U with the given signs on diag(D) (so the principal-minor sign vector
// is the running product of `signs`).
Matrix with_minor_pattern(Eigen::Index n, Rng& rng, const std::vector<int>& signs);
Matrix with_nonzero_minors(Eigen::Index n, Rng& rng);

Matrix in_class(ClassTag tag, Eigen::Index n, Rng& rng);
// A point of the same class at distance O(eps) from a.
Matrix perturb_in_class(ClassTag tag, const Matrix& a, double eps, Rng& rng);

// count matrices, each a perturb_in_class step of size eps from the last.
// GeneralInvertible walks the SPD and SO polar factors separately, so every
// element has det > 0. Steps that leave the class are redrawn.
std::vector<Matrix> walk(ClassTag tag, Eigen::Index n, std::size_t count, double eps, Rng& rng);

}  // namespace mvf::gen
