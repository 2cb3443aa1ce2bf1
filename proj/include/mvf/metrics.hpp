#pragma once

#include "mvf/decompositions.hpp"
#include "mvf/matrix.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

namespace mvf {

// psi : R+ x R+ -> R+ used to combine factor distances into a product metric.
struct PsiFunction {
  std::string name;
  std::function<double(double, double)> eval;

  double operator()(double x, double y) const { return eval(x, y); }

  // (x^p + y^p)^(1/p) for p in [1, inf]; p = inf is max(x, y).
  static PsiFunction p_product(double p);
};

struct PsiReport {
  static constexpr std::array<const char*, 4> kConditionNames{
      "nonnegative-definite", "monotone", "jensen-convex", "homogeneous"};

  std::array<bool, 4> passed{true, true, true, true};
  std::array<std::string, 4> counterexample;

  bool all_passed() const { return passed[0] && passed[1] && passed[2] && passed[3]; }
};

// Fuzzes the four product-metric conditions on a log-spaced grid over
// (0, 1e3]^2 (plus the axes, for definiteness). grid_size >= 10.
PsiReport check_psi(const PsiFunction& psi, int grid_size);

enum class MetricKind {
  Frobenius,
  RiemannianSPD,
  GeodesicSO,
  LogDiag,
  ProcrustesDS,
  HybridDH,
  BritishRailway,
  ProductPsi,
};

std::string_view to_string(MetricKind kind);

struct ProductMetricParts;

class MetricDescriptor {
 public:
  static MetricDescriptor frobenius(ClassTag tag = ClassTag::GeneralInvertible);
  static MetricDescriptor riemannian_spd();
  static MetricDescriptor geodesic_so();
  static MetricDescriptor log_diag(ClassTag tag = ClassTag::DiagonalPositive);
  static MetricDescriptor procrustes();
  // d_R + beta d_S, beta in (0, inf).
  static MetricDescriptor hybrid(double beta);
  static MetricDescriptor british_railway(ClassTag tag = ClassTag::GeneralInvertible);
  // psi(d1(A1, B1), d2(A2, B2)) over a two-factor decomposition. psi is
  // validated with check_psi on construction.
  static MetricDescriptor product(PsiFunction psi, Decomposition decomposition,
                                  MetricDescriptor d1, MetricDescriptor d2);

  MetricKind kind() const noexcept { return kind_; }
  ClassTag tag() const noexcept { return tag_; }
  double beta() const noexcept { return beta_; }
  const ProductMetricParts* product_parts() const noexcept { return product_.get(); }
  std::string name() const;

 private:
  MetricDescriptor(MetricKind kind, ClassTag tag) : kind_(kind), tag_(tag) {}

  MetricKind kind_;
  ClassTag tag_;
  double beta_ = 0.0;
  std::shared_ptr<const ProductMetricParts> product_;
};

struct ProductMetricParts {
  PsiFunction psi;
  Decomposition decomposition;
  MetricDescriptor d1;
  MetricDescriptor d2;
};

// The metric whose geodesics geodesic() constructs for a class.
MetricDescriptor class_metric(ClassTag tag);

// Throws ClassMismatch when an argument fails the descriptor's class.
double metric_eval(const MetricDescriptor& d, const Matrix& a, const Matrix& b,
                   const Tolerance& tol = {});

double product_metric(const PsiFunction& psi, const MetricDescriptor& d1,
                      const MetricDescriptor& d2, Decomposition decomposition,
                      const Matrix& a, const Matrix& b, const Tolerance& tol = {});

struct MajorizationResult {
  bool unbounded = false;
  double constant = 0.0;             // sup of sampled d_target / d_ref
  double adversarial_max_ratio = 0.0;
};

// Samples random pairs from the target's class plus near-coincident pairs
// at distance 1e-1 .. 1e-12 and reports sup d_target / d_ref. "Unbounded" when
// the adversarial ratio exceeds 1e6.
MajorizationResult majorization_probe(const MetricDescriptor& target,
                                      const MetricDescriptor& reference, int sample_count,
                                      Eigen::Index order = 3, std::uint64_t seed = 0x5EED);

}  // namespace mvf
