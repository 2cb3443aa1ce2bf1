#include "mvf/operators.hpp"

#include "mvf/errors.hpp"
#include "mvf/geodesic.hpp"

#include <cmath>
#include <string>

namespace mvf {
namespace {

Curve make_curve(const ParamSamples& samples, ClassTag tag, Curve::Evaluator eval,
                 CurveTraits traits) {
  return Curve(samples.t_min(), samples.t_max(), tag, samples.order(), std::move(eval), traits);
}

CurveTraits traits_of(const OperatorSpec& spec) {
  return {spec.interpolatory(), spec.consistent(), spec.claimed_order()};
}

// Class log / exp pair for log_exp_linear.
struct LogExpPair {
  std::function<Matrix(const Matrix&)> log;
  std::function<Matrix(const Matrix&)> exp;
};

LogExpPair log_exp_for(ClassTag tag, const Tolerance& tol) {
  switch (tag) {
    case ClassTag::SPD:
      return {[tol](const Matrix& a) { return spd_log(a, tol); },
              [](const Matrix& x) {
                return spectral_map(symmetric_eigen(x), [](double v) { return std::exp(v); });
              }};
    case ClassTag::SO:
      return {[tol](const Matrix& a) { return so_log(a, tol); },
              [tol](const Matrix& x) { return so_exp(x, tol); }};
    case ClassTag::DiagonalPositive:
    case ClassTag::PositiveScalar1x1:
      return {[](const Matrix& a) { return Matrix(a.diagonal().array().log().matrix().asDiagonal()); },
              [](const Matrix& x) { return Matrix(x.diagonal().array().exp().matrix().asDiagonal()); }};
    case ClassTag::UnitLowerTriangular:
    case ClassTag::UnitUpperTriangular:
      return {[](const Matrix& a) { return unipotent_log(a); },
              [](const Matrix& x) { return unipotent_exp(x); }};
    default:
      throw Error(ErrorCode::ClassMismatch,
                  "log_exp_linear: no log/exp pair for class " + std::string(to_string(tag)));
  }
}

Curve constant_curve(const ParamSamples& samples, const OperatorSpec& spec) {
  Matrix a = samples[0];
  return make_curve(samples, samples.tag(), [a](double) { return a; }, traits_of(spec));
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::GeodesicPiecewise: return "geodesic_piecewise";
    case OperatorKind::Bernstein: return "bernstein";
    case OperatorKind::LogExpLinear: return "log_exp_linear";
    case OperatorKind::PositiveScalar: return "positive_scalar";
    case OperatorKind::DiagonalElementwise: return "diagonal_elementwise";
    case OperatorKind::PiecewiseConstant: return "piecewise_constant";
  }
  return "unknown";
}

OperatorSpec OperatorSpec::geodesic_piecewise() { return OperatorSpec(OperatorKind::GeodesicPiecewise); }
OperatorSpec OperatorSpec::bernstein(int degree) {
  if (degree < 1) throw Error(ErrorCode::DegreeMismatch, "bernstein: degree must be >= 1");
  OperatorSpec s(OperatorKind::Bernstein);
  s.degree_ = degree;
  return s;
}
OperatorSpec OperatorSpec::log_exp_linear() { return OperatorSpec(OperatorKind::LogExpLinear); }
OperatorSpec OperatorSpec::positive_scalar() { return OperatorSpec(OperatorKind::PositiveScalar); }
OperatorSpec OperatorSpec::diagonal_elementwise(OperatorSpec inner) {
  if (inner.kind() == OperatorKind::DiagonalElementwise)
    throw Error(ErrorCode::InvalidArgument, "diagonal_elementwise: inner operator must be scalar");
  OperatorSpec s(OperatorKind::DiagonalElementwise);
  s.inner_ = std::make_shared<const OperatorSpec>(std::move(inner));
  return s;
}
OperatorSpec OperatorSpec::piecewise_constant() { return OperatorSpec(OperatorKind::PiecewiseConstant); }

bool OperatorSpec::interpolatory() const noexcept {
  switch (kind_) {
    case OperatorKind::Bernstein: return false;
    case OperatorKind::DiagonalElementwise: return inner_->interpolatory();
    default: return true;
  }
}

int OperatorSpec::claimed_order() const noexcept {
  switch (kind_) {
    case OperatorKind::Bernstein:
    case OperatorKind::PiecewiseConstant: return 1;
    case OperatorKind::DiagonalElementwise: return inner_->claimed_order();
    default: return 2;
  }
}

std::string OperatorSpec::name() const {
  std::string n(to_string(kind_));
  if (kind_ == OperatorKind::Bernstein) n += "(degree=" + std::to_string(degree_) + ")";
  if (kind_ == OperatorKind::DiagonalElementwise) n += "(" + inner_->name() + ")";
  return n;
}

Curve build_curve(const OperatorSpec& spec, const ParamSamples& samples) {
  switch (spec.kind()) {
    case OperatorKind::GeodesicPiecewise: return geodesic_piecewise(samples);
    case OperatorKind::Bernstein: return bernstein_de_casteljau(samples, spec.degree());
    case OperatorKind::LogExpLinear: return log_exp_linear(samples);
    case OperatorKind::PositiveScalar: return positive_scalar(samples);
    case OperatorKind::DiagonalElementwise: return diagonal_elementwise(samples, *spec.inner());
    case OperatorKind::PiecewiseConstant: return piecewise_constant(samples);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operator kind");
}

CurveFactory factory(const OperatorSpec& spec) {
  return [spec](const ParamSamples& samples) { return build_curve(spec, samples); };
}

Curve geodesic_piecewise(const ParamSamples& samples) {
  const auto spec = OperatorSpec::geodesic_piecewise();
  if (!has_geodesic(samples.tag()))
    throw Error(ErrorCode::ClassMismatch, "geodesic_piecewise: no geodesic for class " +
                std::string(to_string(samples.tag())));
  if (samples.size() == 1) return constant_curve(samples, spec);

  auto pieces = std::make_shared<std::vector<Geodesic>>();
  pieces->reserve(samples.size() - 1);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    try {
      pieces->push_back(geodesic(samples.tag(), samples[i], samples[i + 1], samples.tolerance()));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " on interval " + std::to_string(i),
                  static_cast<int>(i));
    }
  }
  const std::vector<double> t = samples.t();
  std::shared_ptr<const std::vector<Geodesic>> frozen = std::move(pieces);
  return make_curve(samples, samples.tag(), [t, frozen](double x) {
    const auto loc = locate(t, x);
    return (*frozen)[loc.interval](loc.local);
  }, traits_of(spec));
}

Curve bernstein_de_casteljau(const ParamSamples& samples, int degree) {
  const auto spec = OperatorSpec::bernstein(degree);
  if (static_cast<std::size_t>(degree) + 1 != samples.size())
    throw Error(ErrorCode::DegreeMismatch,
                "DegreeMismatch: degree " + std::to_string(degree) + " needs " +
                    std::to_string(degree + 1) + " samples, got " +
                    std::to_string(samples.size()));
  if (!has_geodesic(samples.tag()))
    throw Error(ErrorCode::ClassMismatch, "bernstein: no geodesic for class " +
                std::string(to_string(samples.tag())));

  const std::vector<Matrix> control = samples.matrices();
  const ClassTag tag = samples.tag();
  const Tolerance tol = samples.tolerance();
  const double t0 = samples.t_min();
  const double width = samples.t_max() - samples.t_min();
  return make_curve(samples, tag, [control, tag, tol, t0, width](double x) {
    const double s = std::clamp((x - t0) / width, 0.0, 1.0);
    std::vector<Matrix> level = control;
    while (level.size() > 1) {
      for (std::size_t i = 0; i + 1 < level.size(); ++i)
        level[i] = geodesic(tag, level[i], level[i + 1], tol)(s);
      level.pop_back();
    }
    return level.front();
  }, traits_of(spec));
}

Curve log_exp_linear(const ParamSamples& samples) {
  const auto spec = OperatorSpec::log_exp_linear();
  const LogExpPair pair = log_exp_for(samples.tag(), samples.tolerance());
  if (samples.size() == 1) return constant_curve(samples, spec);

  auto logs = std::make_shared<std::vector<Matrix>>();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    try {
      logs->push_back(pair.log(samples[i]));
    } catch (const Error& e) {
      throw e.at_sample(static_cast<int>(i));
    }
  }
  const std::vector<double> t = samples.t();
  const std::vector<Matrix> exact = samples.matrices();
  std::shared_ptr<const std::vector<Matrix>> frozen = std::move(logs);
  return make_curve(samples, samples.tag(), [t, exact, frozen, exp = pair.exp](double x) {
    const auto loc = locate(t, x);
    if (loc.local == 0.0) return exact[loc.interval];
    if (loc.local == 1.0) return exact[loc.interval + 1];
    const Matrix mixed = (1.0 - loc.local) * (*frozen)[loc.interval] +
                         loc.local * (*frozen)[loc.interval + 1];
    return exp(mixed);
  }, traits_of(spec));
}

Curve positive_scalar(const ParamSamples& samples) {
  if (samples.order() != 1)
    throw Error(ErrorCode::ClassMismatch, "positive_scalar: samples must be 1x1");
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (!(samples[i](0, 0) > 0.0))
      throw Error(ErrorCode::NonPositiveSample,
                  "NonPositiveSample(" + std::to_string(i) + ")", static_cast<int>(i),
                  static_cast<int>(i));
  const auto spec = OperatorSpec::positive_scalar();
  std::vector<double> logs;
  for (const auto& m : samples.matrices()) logs.push_back(std::log(m(0, 0)));
  const std::vector<double> t = samples.t();
  const std::vector<Matrix> exact = samples.matrices();
  return Curve(samples.t_min(), samples.t_max(), ClassTag::PositiveScalar1x1, 1,
               [t, logs, exact](double x) {
                 if (t.size() == 1) return exact.front();
                 const auto loc = locate(t, x);
                 if (loc.local == 0.0) return exact[loc.interval];
                 if (loc.local == 1.0) return exact[loc.interval + 1];
                 Matrix m(1, 1);
                 m(0, 0) = std::exp((1.0 - loc.local) * logs[loc.interval] +
                                    loc.local * logs[loc.interval + 1]);
                 return m;
               },
               traits_of(spec));
}

Curve diagonal_elementwise(const ParamSamples& samples, const OperatorSpec& inner) {
  const auto spec = OperatorSpec::diagonal_elementwise(inner);
  const auto n = samples.order();
  const Tolerance& tol = samples.tolerance();
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (auto c = check_class(samples[i], ClassTag::Diagonal, tol); !c)
      throw Error(ErrorCode::ClassMismatch, "diagonal_elementwise: sample " +
                  std::to_string(i) + " is not diagonal", static_cast<int>(i),
                  static_cast<int>(i));

  Vector signs(n);
  bool all_positive = true;
  std::vector<Curve> positions;
  for (Eigen::Index k = 0; k < n; ++k) {
    std::vector<double> t = samples.t();
    std::vector<Matrix> magnitudes;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double v = samples[i](k, k);
      if (!(std::abs(v) > tol.boundary))
        throw Error(ErrorCode::ZeroDiagonal, "ZeroDiagonal at position " + std::to_string(k) +
                    " of sample " + std::to_string(i), static_cast<int>(k), static_cast<int>(i));
      const double sign = v > 0.0 ? 1.0 : -1.0;
      if (i == 0) {
        signs(k) = sign;
      } else if (sign != signs(k)) {
        throw Error(ErrorCode::SignPatternViolation,
                    "SignPatternViolation(" + std::to_string(i) + ", " + std::to_string(k) + ")",
                    static_cast<int>(k), static_cast<int>(i));
      }
      magnitudes.push_back(Matrix::Constant(1, 1, std::abs(v)));
    }
    if (signs(k) < 0.0) all_positive = false;
    positions.push_back(build_curve(
        inner, ParamSamples(std::move(t), std::move(magnitudes), ClassTag::PositiveScalar1x1, tol)));
  }

  return make_curve(samples, all_positive ? ClassTag::DiagonalPositive : ClassTag::DiagonalNonzero,
                    [signs, positions](double x) {
                      Vector d(signs.size());
                      for (Eigen::Index k = 0; k < d.size(); ++k)
                        d(k) = signs(k) * positions[static_cast<std::size_t>(k)](x)(0, 0);
                      return Matrix(d.asDiagonal());
                    },
                    traits_of(spec));
}

Curve piecewise_constant(const ParamSamples& samples) {
  const auto spec = OperatorSpec::piecewise_constant();
  if (samples.size() == 1) return constant_curve(samples, spec);
  const std::vector<double> t = samples.t();
  const std::vector<Matrix> values = samples.matrices();
  return make_curve(samples, samples.tag(), [t, values](double x) {
    const auto loc = locate(t, x);
    return loc.local <= 0.5 ? values[loc.interval] : values[loc.interval + 1];
  }, traits_of(spec));
}

}  // namespace mvf
