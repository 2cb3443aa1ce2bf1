#pragma once

#include "mvf/curve.hpp"
#include "mvf/samples.hpp"

#include <functional>
#include <memory>
#include <string>

namespace mvf {

enum class OperatorKind {
  GeodesicPiecewise,
  Bernstein,
  LogExpLinear,
  PositiveScalar,
  DiagonalElementwise,
  // Nearest sample with left tie-break. Order 1; exists to exercise the
  // min rule for product operators.
  PiecewiseConstant,
};

std::string_view to_string(OperatorKind kind);

class OperatorSpec {
 public:
  static OperatorSpec geodesic_piecewise();
  static OperatorSpec bernstein(int degree);
  static OperatorSpec log_exp_linear();
  static OperatorSpec positive_scalar();
  static OperatorSpec diagonal_elementwise(OperatorSpec inner);
  static OperatorSpec piecewise_constant();

  OperatorKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return degree_; }
  const OperatorSpec* inner() const noexcept { return inner_.get(); }

  bool interpolatory() const noexcept;
  bool consistent() const noexcept { return true; }
  int claimed_order() const noexcept;
  std::string name() const;

 private:
  explicit OperatorSpec(OperatorKind kind) : kind_(kind) {}

  OperatorKind kind_;
  int degree_ = 0;
  std::shared_ptr<const OperatorSpec> inner_;
};

using CurveFactory = std::function<Curve(const ParamSamples&)>;

// Dispatches on spec.kind() with the samples' class.
Curve build_curve(const OperatorSpec& spec, const ParamSamples& samples);
CurveFactory factory(const OperatorSpec& spec);

// On [t_i, t_{i+1}] the class geodesic between A_i and A_{i+1} at the local
// parameter. LogBranchFailure carries the interval index.
Curve geodesic_piecewise(const ParamSamples& samples);

// de Casteljau pyramid of class geodesics over [t_0, t_N] mapped to [0, 1].
// Endpoint-interpolatory only.
Curve bernstein_de_casteljau(const ParamSamples& samples, int degree);

// exp of the piecewise-linear interpolant of the class logarithms. Supports
// SPD, SO, DiagonalPositive, PositiveScalar1x1 and the unipotent classes.
Curve log_exp_linear(const ParamSamples& samples);

// 1x1 positive samples; geometric (log-linear) interpolation.
Curve positive_scalar(const ParamSamples& samples);

// Applies `inner` to |a_kk| per diagonal position and restores the common
// sign. SignPatternViolation / ZeroDiagonal on bad input.
Curve diagonal_elementwise(const ParamSamples& samples, const OperatorSpec& inner);

Curve piecewise_constant(const ParamSamples& samples);

}  // namespace mvf
