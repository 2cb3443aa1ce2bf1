#include "mvf/curve.hpp"

#include "mvf/errors.hpp"

#include <algorithm>
#include <string>

namespace mvf {

Curve::Curve(double t_min, double t_max, ClassTag tag, Eigen::Index order, Evaluator eval,
             CurveTraits traits, std::vector<std::string> warnings)
    : t_min_(t_min),
      t_max_(t_max),
      tag_(tag),
      order_(order),
      eval_(std::make_shared<const Evaluator>(std::move(eval))),
      traits_(traits),
      warnings_(std::make_shared<const std::vector<std::string>>(std::move(warnings))) {
  if (!(t_max >= t_min))
    throw Error(ErrorCode::InvalidArgument, "curve: empty domain");
}

Matrix Curve::operator()(double t) const {
  const double slack = 1e-12 * std::max(1.0, t_max_ - t_min_);
  if (!(t >= t_min_ - slack && t <= t_max_ + slack))
    throw Error(ErrorCode::OutOfDomain, "curve: t = " + std::to_string(t) + " outside [" +
                std::to_string(t_min_) + ", " + std::to_string(t_max_) + "]");
  return (*eval_)(std::clamp(t, t_min_, t_max_));
}

std::vector<Matrix> Curve::evaluate(const std::vector<double>& ts) const {
  std::vector<Matrix> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back((*this)(t));
  return out;
}

}  // namespace mvf
