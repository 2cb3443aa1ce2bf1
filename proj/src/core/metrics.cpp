#include "mvf/metrics.hpp"

#include "mvf/errors.hpp"
#include "mvf/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mvf {
namespace {

std::string point(double x, double y) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << x << ", " << y << ")";
  return os.str();
}

void require_member(const MetricDescriptor& d, const Matrix& m, const Tolerance& tol) {
  if (auto c = check_class(m, d.tag(), tol); !c)
    throw Error(ErrorCode::ClassMismatch, "metric " + d.name() + ": argument fails " +
                std::string(to_string(d.tag())) + ": " + c.diagnostic);
}

double riemannian_spd(const Matrix& a, const Matrix& b) {
  const Matrix inv_half = spectral_map(symmetric_eigen(a), [](double v) {
    return 1.0 / std::sqrt(v);
  });
  const SymmetricEigen eig = symmetric_eigen(inv_half * b * inv_half);
  return eig.values.array().log().matrix().norm();
}

double procrustes(const Matrix& a, const Matrix& b) {
  return (symmetric_eigen(a).values - symmetric_eigen(b).values).norm();
}

double log_diag(const Matrix& a, const Matrix& b) {
  return (a.diagonal().array().log() - b.diagonal().array().log()).matrix().norm();
}

double raw_metric(const MetricDescriptor& d, const Matrix& a, const Matrix& b,
                  const Tolerance& tol) {
  switch (d.kind()) {
    case MetricKind::Frobenius:
      return frobenius_norm(a - b);
    case MetricKind::RiemannianSPD:
      return riemannian_spd(a, b);
    case MetricKind::GeodesicSO:
      return frobenius_norm(so_log(a.transpose() * b, tol));
    case MetricKind::LogDiag:
      return log_diag(a, b);
    case MetricKind::ProcrustesDS:
      return procrustes(a, b);
    case MetricKind::HybridDH:
      return riemannian_spd(a, b) + d.beta() * procrustes(a, b);
    case MetricKind::BritishRailway:
      // Bitwise equality: the discontinuity at A = B must be observable.
      return (a.rows() == b.rows() && a == b) ? 0.0 : frobenius_norm(a) + frobenius_norm(b);
    case MetricKind::ProductPsi: {
      const auto* p = d.product_parts();
      return product_metric(p->psi, p->d1, p->d2, p->decomposition, a, b, tol);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown metric");
}

}  // namespace

PsiFunction PsiFunction::p_product(double p) {
  if (!(p >= 1.0))
    throw Error(ErrorCode::InvalidArgument, "p-product needs p in [1, inf]");
  std::ostringstream name;
  name << "p-product(p=" << p << ")";
  if (std::isinf(p))
    return {name.str(), [](double x, double y) { return std::max(x, y); }};
  if (p == 1.0) return {name.str(), [](double x, double y) { return x + y; }};
  if (p == 2.0) return {name.str(), [](double x, double y) { return std::hypot(x, y); }};
  return {name.str(), [p](double x, double y) {
            const double m = std::max(x, y);
            if (m == 0.0) return 0.0;
            return m * std::pow(std::pow(x / m, p) + std::pow(y / m, p), 1.0 / p);
          }};
}

PsiReport check_psi(const PsiFunction& psi, int grid_size) {
  if (grid_size < 10)
    throw Error(ErrorCode::InvalidArgument, "check_psi: grid_size must be >= 10");
  std::vector<double> grid{0.0};
  for (int i = 0; i < grid_size; ++i)
    grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / (grid_size - 1)));

  PsiReport report;
  auto record = [&](int cond, const std::string& where) {
    if (report.passed[static_cast<std::size_t>(cond)]) {
      report.passed[static_cast<std::size_t>(cond)] = false;
      report.counterexample[static_cast<std::size_t>(cond)] = where;
    }
  };
  constexpr double kRel = 1e-12;

  for (double x : grid)
    for (double y : grid) {
      const double v = psi(x, y);
      const bool origin = x == 0.0 && y == 0.0;
      if (!std::isfinite(v) || v < 0.0 || (origin ? v != 0.0 : !(v > 0.0)))
        record(0, point(x, y));
    }

  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    for (double y : grid) {
      const double lo_x = psi(grid[i], y), hi_x = psi(grid[i + 1], y);
      if (hi_x < lo_x * (1.0 - kRel)) record(1, point(grid[i + 1], y));
      const double lo_y = psi(y, grid[i]), hi_y = psi(y, grid[i + 1]);
      if (hi_y < lo_y * (1.0 - kRel)) record(1, point(y, grid[i + 1]));
    }

  for (double x1 : grid)
    for (double x2 : grid) {
      const double px = psi(x1, x2);
      for (double y1 : grid)
        for (double y2 : grid) {
          const double mid = psi(0.5 * (x1 + y1), 0.5 * (x2 + y2));
          const double avg = 0.5 * (px + psi(y1, y2));
          if (mid > avg * (1.0 + kRel) + 1e-300)
            record(2, point(x1, x2) + " / " + point(y1, y2));
        }
    }

  for (double alpha : {1e-3, 0.5, 2.0, 7.5, 1e3})
    for (double x : grid)
      for (double y : grid) {
        const double lhs = psi(alpha * x, alpha * y);
        const double rhs = alpha * psi(x, y);
        if (std::abs(lhs - rhs) > 1e-10 * std::max(std::abs(rhs), 1e-300))
          record(3, point(x, y) + " alpha=" + std::to_string(alpha));
      }
  return report;
}

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Frobenius: return "frobenius";
    case MetricKind::RiemannianSPD: return "riemannian_spd";
    case MetricKind::GeodesicSO: return "geodesic_so";
    case MetricKind::LogDiag: return "log_diag";
    case MetricKind::ProcrustesDS: return "procrustes_dS";
    case MetricKind::HybridDH: return "hybrid_dH";
    case MetricKind::BritishRailway: return "british_railway";
    case MetricKind::ProductPsi: return "product_psi";
  }
  return "unknown";
}

MetricDescriptor MetricDescriptor::frobenius(ClassTag tag) {
  return {MetricKind::Frobenius, tag};
}
MetricDescriptor MetricDescriptor::riemannian_spd() {
  return {MetricKind::RiemannianSPD, ClassTag::SPD};
}
MetricDescriptor MetricDescriptor::geodesic_so() { return {MetricKind::GeodesicSO, ClassTag::SO}; }
MetricDescriptor MetricDescriptor::log_diag(ClassTag tag) {
  if (tag != ClassTag::DiagonalPositive && tag != ClassTag::PositiveScalar1x1)
    throw Error(ErrorCode::InvalidArgument, "log_diag needs positive diagonal matrices");
  return {MetricKind::LogDiag, tag};
}
MetricDescriptor MetricDescriptor::procrustes() {
  return {MetricKind::ProcrustesDS, ClassTag::SPD};
}
MetricDescriptor MetricDescriptor::hybrid(double beta) {
  if (!(beta > 0.0) || std::isinf(beta))
    throw Error(ErrorCode::InvalidArgument, "hybrid metric needs beta in (0, inf)");
  MetricDescriptor d{MetricKind::HybridDH, ClassTag::SPD};
  d.beta_ = beta;
  return d;
}
MetricDescriptor MetricDescriptor::british_railway(ClassTag tag) {
  return {MetricKind::BritishRailway, tag};
}

MetricDescriptor MetricDescriptor::product(PsiFunction psi, Decomposition decomposition,
                                           MetricDescriptor d1, MetricDescriptor d2) {
  if (decomposition != Decomposition::Polar && decomposition != Decomposition::QR)
    throw Error(ErrorCode::InvalidArgument,
                "product metric needs a two-factor decomposition (polar or qr)");
  if (auto report = check_psi(psi, 10); !report.all_passed())
    throw Error(ErrorCode::InvalidArgument, "psi '" + psi.name + "' fails the product-metric conditions");
  MetricDescriptor d{MetricKind::ProductPsi, ClassTag::GeneralInvertible};
  d.product_ = std::make_shared<const ProductMetricParts>(
      ProductMetricParts{std::move(psi), decomposition, std::move(d1), std::move(d2)});
  return d;
}

std::string MetricDescriptor::name() const {
  std::string n(to_string(kind_));
  if (kind_ == MetricKind::HybridDH) n += "(beta=" + std::to_string(beta_) + ")";
  if (kind_ == MetricKind::ProductPsi)
    n += "[" + product_->psi.name + ", " + std::string(to_string(product_->decomposition)) +
         ", " + product_->d1.name() + " x " + product_->d2.name() + "]";
  return n;
}

MetricDescriptor class_metric(ClassTag tag) {
  switch (tag) {
    case ClassTag::SPD: return MetricDescriptor::riemannian_spd();
    case ClassTag::SO: return MetricDescriptor::geodesic_so();
    case ClassTag::DiagonalPositive:
    case ClassTag::PositiveScalar1x1: return MetricDescriptor::log_diag(tag);
    default: return MetricDescriptor::frobenius(tag);
  }
}

double metric_eval(const MetricDescriptor& d, const Matrix& a, const Matrix& b,
                   const Tolerance& tol) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::ClassMismatch, "metric " + d.name() + ": order mismatch");
  if (d.kind() != MetricKind::ProductPsi) {
    require_member(d, a, tol);
    require_member(d, b, tol);
  }
  return raw_metric(d, a, b, tol);
}

double product_metric(const PsiFunction& psi, const MetricDescriptor& d1,
                      const MetricDescriptor& d2, Decomposition decomposition,
                      const Matrix& a, const Matrix& b, const Tolerance& tol) {
  const Factorization fa = decompose(decomposition, a, tol);
  const Factorization fb = decompose(decomposition, b, tol);
  if (fa.factors.size() != 2)
    throw Error(ErrorCode::InvalidArgument, "product metric needs a two-factor decomposition");
  return psi(metric_eval(d1, fa.factors[0].matrix, fb.factors[0].matrix, tol),
             metric_eval(d2, fa.factors[1].matrix, fb.factors[1].matrix, tol));
}

MajorizationResult majorization_probe(const MetricDescriptor& target,
                                      const MetricDescriptor& reference, int sample_count,
                                      Eigen::Index order, std::uint64_t seed) {
  if (sample_count < 100)
    throw Error(ErrorCode::InvalidArgument, "majorization_probe: sample_count must be >= 100");
  const ClassTag tag = target.tag();
  const Eigen::Index n = tag == ClassTag::PositiveScalar1x1 ? 1 : order;
  gen::Rng rng(seed);
  MajorizationResult result;

  auto ratio = [&](const Matrix& a, const Matrix& b) -> double {
    const double ref = metric_eval(reference, a, b);
    const double tgt = metric_eval(target, a, b);
    if (ref == 0.0) return tgt == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return tgt / ref;
  };

  for (int i = 0; i < sample_count; ++i) {
    const Matrix a = gen::in_class(tag, n, rng);
    const Matrix b = gen::in_class(tag, n, rng);
    result.constant = std::max(result.constant, ratio(a, b));
  }

  const int bases = std::max(1, sample_count / 20);
  for (int i = 0; i < bases; ++i) {
    const Matrix a = gen::in_class(tag, n, rng);
    for (int k = 1; k <= 12; ++k) {
      const Matrix b = gen::perturb_in_class(tag, a, std::pow(10.0, -k), rng);
      const double r = ratio(a, b);
      result.adversarial_max_ratio = std::max(result.adversarial_max_ratio, r);
    }
  }
  result.constant = std::max(result.constant, result.adversarial_max_ratio);
  result.unbounded = result.adversarial_max_ratio > 1e6;
  return result;
}

}  // namespace mvf
