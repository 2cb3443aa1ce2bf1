#pragma once

#include "mvf/matrix.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace mvf {

struct CurveTraits {
  bool interpolatory = false;
  bool consistent = false;
  int claimed_order = 0;
};

// An evaluable MVF Gamma: [t_min, t_max] -> class. Immutable; evaluation is
// reentrant and may be called concurrently. No extrapolation.
class Curve {
 public:
  using Evaluator = std::function<Matrix(double)>;

  Curve(double t_min, double t_max, ClassTag tag, Eigen::Index order, Evaluator eval,
        CurveTraits traits = {}, std::vector<std::string> warnings = {});

  // Throws OutOfDomain outside [t_min, t_max].
  Matrix operator()(double t) const;
  std::vector<Matrix> evaluate(const std::vector<double>& ts) const;

  double t_min() const noexcept { return t_min_; }
  double t_max() const noexcept { return t_max_; }
  ClassTag tag() const noexcept { return tag_; }
  Eigen::Index order() const noexcept { return order_; }
  const CurveTraits& traits() const noexcept { return traits_; }
  const std::vector<std::string>& warnings() const noexcept { return *warnings_; }

 private:
  double t_min_;
  double t_max_;
  ClassTag tag_;
  Eigen::Index order_;
  std::shared_ptr<const Evaluator> eval_;
  CurveTraits traits_;
  std::shared_ptr<const std::vector<std::string>> warnings_;
};

}  // namespace mvf
