#include "mvf/samples.hpp"

#include "mvf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mvf {

ParamSamples::ParamSamples(std::vector<double> t, std::vector<Matrix> matrices,
                           ClassTag tag, const Tolerance& tol)
    : t_(std::move(t)), matrices_(std::move(matrices)), tag_(tag), tol_(tol) {
  if (t_.empty()) throw Error(ErrorCode::InvalidArgument, "samples: empty sequence");
  if (t_.size() != matrices_.size())
    throw Error(ErrorCode::InvalidArgument, "samples: parameter and matrix counts differ");
  if (!(tol_.tau_class > 0.0) || !(tol_.boundary > 0.0))
    throw Error(ErrorCode::InvalidArgument, "samples: tolerances must be positive");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!std::isfinite(t_[i]))
      throw Error(ErrorCode::InvalidArgument, "samples: non-finite parameter", idx, idx);
    if (i > 0 && !(t_[i] > t_[i - 1]))
      throw Error(ErrorCode::InvalidArgument,
                  "samples: parameters not strictly increasing at index " + std::to_string(i),
                  idx, idx);
    if (!is_valid_matrix(matrices_[i]))
      throw Error(ErrorCode::InvalidArgument, "samples: invalid matrix at index " +
                  std::to_string(i), idx, idx);
    if (matrices_[i].rows() != matrices_.front().rows())
      throw Error(ErrorCode::InvalidArgument,
                  "samples: matrix order differs at index " + std::to_string(i), idx, idx);
    if (auto c = check_class(matrices_[i], tag_, tol_); !c)
      throw Error(ErrorCode::ClassViolation,
                  "samples: matrix " + std::to_string(i) + " fails " +
                      std::string(to_string(tag_)) + ": " + c.diagnostic,
                  idx, idx);
  }
}

double ParamSamples::mesh_width() const noexcept {
  double h = 0.0;
  for (std::size_t i = 1; i < t_.size(); ++i) h = std::max(h, t_[i] - t_[i - 1]);
  return h;
}

IntervalLocation locate(const std::vector<double>& t, double x) {
  if (t.size() < 2) return {0, 0.0};
  const double lo = t.front();
  const double hi = t.back();
  const double slack = 1e-12 * std::max(1.0, hi - lo);
  if (!(x >= lo - slack && x <= hi + slack))
    throw Error(ErrorCode::OutOfDomain,
                "evaluation point " + std::to_string(x) + " outside [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "]");
  x = std::clamp(x, lo, hi);
  auto it = std::upper_bound(t.begin(), t.end(), x);
  std::size_t i = it == t.begin() ? 0 : static_cast<std::size_t>(it - t.begin()) - 1;
  i = std::min(i, t.size() - 2);
  const double local = (x - t[i]) / (t[i + 1] - t[i]);
  return {i, std::clamp(local, 0.0, 1.0)};
}

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = a;
    return g;
  }
  for (std::size_t i = 0; i < n; ++i)
    g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = b;
  return g;
}

}  // namespace mvf
