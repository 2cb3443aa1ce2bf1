#include "mvf/analysis.hpp"

#include "mvf/errors.hpp"
#include "mvf/random.hpp"

#include <algorithm>
#include <cmath>

namespace mvf {
namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

double rel_gap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

ParamSamples TruthFunction::sample(std::size_t intervals, const Tolerance& tol) const {
  const auto t = uniform_grid(t_min, t_max, intervals + 1);
  std::vector<Matrix> ms;
  ms.reserve(t.size());
  for (double x : t) ms.push_back(eval(x));
  return ParamSamples(t, std::move(ms), tag, tol);
}

Curve TruthFunction::as_curve() const {
  return Curve(t_min, t_max, tag, order, eval, CurveTraits{true, true, 0});
}

std::vector<std::string> truth_ids() {
  return {"constant",    "spd_exp_curve", "spd_bend_curve", "rot_curve",
          "polar_curve", "sqrt_rot",      "lower_tri_curve"};
}

TruthFunction truth_function(const std::string& id) {
  TruthFunction f;
  f.id = id;
  if (id == "constant") {
    f.tag = ClassTag::SPD;
    const Matrix c = mat2(2.0, 0.5, 0.5, 1.0);
    f.eval = [c](double) { return c; };
  } else if (id == "spd_exp_curve") {
    // A one-parameter subgroup; piecewise geodesics reproduce it exactly.
    f.tag = ClassTag::SPD;
    const Matrix s = mat2(1.0, 0.5, 0.5, -0.3);
    f.eval = [s](double t) { return spd_exp(t * s); };
  } else if (id == "spd_bend_curve") {
    f.tag = ClassTag::SPD;
    const Matrix s = mat2(1.0, 0.5, 0.5, -0.3);
    const Matrix b = mat2(-0.4, 0.8, 0.8, 0.6);
    f.eval = [s, b](double t) { return spd_exp(t * s + t * t * b); };
  } else if (id == "rot_curve") {
    f.tag = ClassTag::SO;
    f.eval = [](double t) { return planar_rotation(t); };
  } else if (id == "polar_curve") {
    // P(t) rot(t) with a curved SPD factor so that neither factor is a
    // geodesic of its class.
    f.tag = ClassTag::GeneralInvertible;
    f.eval = [](double t) {
      const double c = 0.5 * std::sin(2.0 * t);
      return Matrix(spd_exp(mat2(t, c, c, 0.5 * t)) * planar_rotation(t));
    };
  } else if (id == "sqrt_rot") {
    f.tag = ClassTag::SO;
    f.eval = [](double t) { return planar_rotation(std::sqrt(std::max(t, 0.0))); };
  } else if (id == "lower_tri_curve") {
    f.tag = ClassTag::LowerTriangularPosDiag;
    f.eval = [](double t) { return mat2(std::exp(t), 0.0, std::sin(t), 1.0 + 0.5 * t * t); };
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown truth function '" + id + "'");
  }
  return f;
}

std::pair<double, double> loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error(ErrorCode::InvalidArgument, "loglog_fit: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  return {slope, std::exp(intercept)};
}

OrderReport approximation_order(const TruthFunction& truth, const CurveFactory& factory,
                                const MetricDescriptor& metric, int levels, int base_intervals) {
  if (levels < 4) throw Error(ErrorCode::InvalidArgument, "approximation_order: levels must be >= 4");
  if (base_intervals < 1) throw Error(ErrorCode::InvalidArgument, "approximation_order: base_intervals must be >= 1");

  OrderReport r;
  const double width = truth.t_max - truth.t_min;
  for (int k = 0; k < levels; ++k) {
    const std::size_t intervals = static_cast<std::size_t>(base_intervals) << k;
    const Curve curve = factory(truth.sample(intervals));
    double err = 0.0;
    for (double t : uniform_grid(truth.t_min, truth.t_max, 16 * intervals + 1))
      err = std::max(err, metric_eval(metric, truth(t), curve(t)));
    r.h.push_back(width / static_cast<double>(intervals));
    r.errors.push_back(err);
  }

  r.exact = std::all_of(r.errors.begin(), r.errors.end(), [](double e) { return e <= 1e-10; });
  if (r.exact) return r;

  // Errors at roundoff level on fine meshes would poison the log fit.
  for (double& e : r.errors) e = std::max(e, 1e-300);
  std::tie(r.slope, r.constant) = loglog_fit(r.h, r.errors);
  r.fit_levels = levels;

  const double expected = std::pow(2.0, r.slope);
  bool pre_asymptotic = false;
  for (int k = 0; k + 1 < levels; ++k) {
    const double ratio = r.errors[k] / r.errors[k + 1];
    if (std::abs(ratio / expected - 1.0) > 0.25) pre_asymptotic = true;
  }
  if (pre_asymptotic) {
    const std::vector<double> h(r.h.end() - 3, r.h.end());
    const std::vector<double> e(r.errors.end() - 3, r.errors.end());
    std::tie(r.slope, r.constant) = loglog_fit(h, e);
    r.fit_levels = 3;
  }
  return r;
}

HolderReport holder_exponent(const Curve& curve, const MetricDescriptor& metric,
                             std::uint64_t seed, int points_per_delta) {
  const double width = curve.t_max() - curve.t_min();
  if (!(width > 0.0)) throw Error(ErrorCode::InvalidArgument, "holder_exponent: empty domain");
  if (points_per_delta < 1) throw Error(ErrorCode::InvalidArgument, "holder_exponent: points_per_delta must be >= 1");

  gen::Rng rng(seed);
  HolderReport r;
  r.points_per_delta = points_per_delta + 1;
  for (int k = 5; k <= 15; ++k) {
    const double delta = std::ldexp(width, -k);
    double sup = metric_eval(metric, curve(curve.t_min()), curve(curve.t_min() + delta));
    for (int i = 0; i < points_per_delta; ++i) {
      const double t = gen::uniform(rng, curve.t_min(), curve.t_max() - delta);
      sup = std::max(sup, metric_eval(metric, curve(t), curve(t + delta)));
    }
    r.deltas.push_back(delta);
    r.sup_distances.push_back(sup);
  }
  r.exact = std::all_of(r.sup_distances.begin(), r.sup_distances.end(),
                        [](double d) { return d <= 1e-14; });
  if (r.exact) return r;
  std::vector<double> d = r.sup_distances;
  for (double& x : d) x = std::max(x, 1e-300);
  std::tie(r.alpha, r.constant) = loglog_fit(r.deltas, d);
  r.alpha = std::clamp(r.alpha, 1e-6, 1.05);
  return r;
}

CheckReport check_det_commutativity(const CurveFactory& op, const ParamSamples& samples,
                                    const CurveFactory& scalar_op) {
  std::vector<Matrix> dets;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = determinant(samples[i]);
    if (!(d > 0.0))
      throw Error(ErrorCode::ClassViolation,
                  "check_det_commutativity: det(A) = " + std::to_string(d) +
                      " is not a positive scalar",
                  static_cast<int>(i), static_cast<int>(i));
    dets.push_back(Matrix::Constant(1, 1, d));
  }
  const Curve g = op(samples);
  const Curve s = scalar_op(ParamSamples(samples.t(), dets, ClassTag::PositiveScalar1x1,
                                         samples.tolerance()));
  CheckReport r;
  for (double t : uniform_grid(samples.t_min(), samples.t_max(), kScanPoints)) {
    const double gap = rel_gap(s(t)(0, 0), determinant(g(t)));
    if (gap > r.max_discrepancy) {
      r.max_discrepancy = gap;
      r.worst_t = t;
    }
  }
  r.passed = r.max_discrepancy <= kScanTolerance;
  return r;
}

CheckReport check_homogeneity(const CurveFactory& op, const ParamSamples& samples,
                              const std::vector<double>& alphas,
                              const CurveFactory& scalar_op) {
  if (alphas.size() != samples.size())
    throw Error(ErrorCode::InvalidArgument, "check_homogeneity: one scalar per sample required");
  std::vector<Matrix> scaled;
  std::vector<Matrix> scalars;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    scaled.push_back(alphas[i] * samples[i]);
    scalars.push_back(Matrix::Constant(1, 1, alphas[i]));
  }
  // ParamSamples rejects scalings that leave the class.
  const ParamSamples scaled_samples(samples.t(), std::move(scaled), samples.tag(),
                                    samples.tolerance());
  const ParamSamples scalar_samples(samples.t(), std::move(scalars), ClassTag::PositiveScalar1x1,
                                    samples.tolerance());
  const Curve lhs = op(scaled_samples);
  const Curve rhs = op(samples);
  const Curve s = scalar_op(scalar_samples);
  CheckReport r;
  for (double t : uniform_grid(samples.t_min(), samples.t_max(), kScanPoints)) {
    const Matrix l = lhs(t);
    const Matrix rr = s(t)(0, 0) * rhs(t);
    const double gap = (l - rr).norm() / std::max({l.norm(), rr.norm(), 1e-300});
    if (gap > r.max_discrepancy) {
      r.max_discrepancy = gap;
      r.worst_t = t;
    }
  }
  r.passed = r.max_discrepancy <= kScanTolerance;
  return r;
}

}  // namespace mvf
