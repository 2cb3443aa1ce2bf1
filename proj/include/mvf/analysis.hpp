#pragma once

#include "mvf/metrics.hpp"
#include "mvf/operators.hpp"

#include <string>
#include <vector>

namespace mvf {

// An analytic MVF on [t_min, t_max] used as ground truth.
struct TruthFunction {
  std::string id;
  double t_min = 0.0;
  double t_max = 1.0;
  ClassTag tag = ClassTag::GeneralInvertible;
  Eigen::Index order = 2;
  std::function<Matrix(double)> eval;

  Matrix operator()(double t) const { return eval(t); }
  ParamSamples sample(std::size_t intervals, const Tolerance& tol = {}) const;
  Curve as_curve() const;
};

// constant, spd_exp_curve, spd_bend_curve, rot_curve, polar_curve, sqrt_rot,
// lower_tri_curve. Throws InvalidArgument for anything else.
TruthFunction truth_function(const std::string& id);
std::vector<std::string> truth_ids();

struct OrderReport {
  std::vector<double> h;       // strictly decreasing
  std::vector<double> errors;  // max metric error per level
  double slope = 0.0;
  double constant = 0.0;
  bool exact = false;          // every error <= 1e-10, no fit
  int fit_levels = 0;          // levels used by the final fit
};

// Level k samples the truth on base_intervals * 2^k uniform intervals, builds
// the curve and takes the max error over 16 points per interval.
OrderReport approximation_order(const TruthFunction& truth, const CurveFactory& factory,
                                const MetricDescriptor& metric, int levels = 5,
                                int base_intervals = 4);

struct HolderReport {
  double alpha = 0.0;
  double constant = 0.0;
  bool exact = false;
  std::vector<double> deltas;
  std::vector<double> sup_distances;
  int points_per_delta = 0;
};

// sup over t of d(G(t), G(t + D)) for D = 2^-5 .. 2^-15 of the domain length;
// t is t_min plus uniform random draws. alpha is the log-log slope of the
// envelope, clipped to (0, 1.05].
HolderReport holder_exponent(const Curve& curve, const MetricDescriptor& metric,
                             std::uint64_t seed = 0x5EED, int points_per_delta = 64);

struct CheckReport {
  bool passed = false;
  double max_discrepancy = 0.0;
  double worst_t = 0.0;
};

inline constexpr std::size_t kScanPoints = 1001;
inline constexpr double kScanTolerance = 1e-8;

// scalar_op({det A_i})(t) against det(op(samples)(t)) on the scan grid.
// Determinants must be positive (ClassViolation otherwise).
CheckReport check_det_commutativity(const CurveFactory& op, const ParamSamples& samples,
                                    const CurveFactory& scalar_op);

// op(alpha A)(t) against scalar_op(alpha)(t) op(A)(t). For a polar product the
// scalar is carried by the SPD factor (alpha_1 = alpha, alpha_2 = 1).
CheckReport check_homogeneity(const CurveFactory& op, const ParamSamples& samples,
                              const std::vector<double>& alphas,
                              const CurveFactory& scalar_op);

// Least-squares fit of log y = log c + slope log x.
std::pair<double, double> loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mvf
