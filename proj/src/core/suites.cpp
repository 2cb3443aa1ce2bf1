#include "mvf/suites.hpp"

#include "mvf/analysis.hpp"
#include "mvf/errors.hpp"
#include "mvf/geodesic.hpp"
#include "mvf/metrics.hpp"
#include "mvf/product_operators.hpp"
#include "mvf/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace mvf {
namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ParamSamples walk_samples(ClassTag tag, Eigen::Index n, std::size_t count, double eps,
                          gen::Rng& rng) {
  return ParamSamples(uniform_grid(0.0, 1.0, count), gen::walk(tag, n, count, eps, rng), tag);
}

CurveFactory polar_factory(const OperatorSpec& s1, const OperatorSpec& s2) {
  return [s1, s2](const ParamSamples& s) { return product_operator(Decomposition::Polar, {s1, s2}, s); };
}

// Symmetry, identity and triangle inequality on random triples.
SuiteCheck axioms(const std::string& label, const MetricDescriptor& d, ClassTag tag, int triples,
                  gen::Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < triples; ++i) {
    const Matrix a = gen::in_class(tag, 3, rng), b = gen::in_class(tag, 3, rng),
                 c = gen::in_class(tag, 3, rng);
    const double ab = metric_eval(d, a, b), ba = metric_eval(d, b, a), bc = metric_eval(d, b, c),
                 ac = metric_eval(d, a, c), aa = metric_eval(d, a, a);
    const double scale = std::max({1.0, ab, bc, ac});
    worst = std::max({worst, std::abs(ab - ba) / scale, aa / scale,
                      (ac - ab - bc) / scale, ab > 1e-12 ? 0.0 : 1.0});
  }
  return {"axioms " + label, worst <= 1e-10, fmt("worst defect %.3g", worst)};
}

SuiteCheck metric_property(const std::string& label, ClassTag tag, const MetricDescriptor& d,
                           const std::function<Geodesic(const Matrix&, const Matrix&)>& make,
                           int pairs, gen::Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const auto ab = gen::walk(tag, 3, 2, 1.0, rng);
    const Geodesic g = make(ab[0], ab[1]);
    const double full = metric_eval(d, ab[0], ab[1]);
    for (int k = 1; k <= 9; ++k) {
      const double s = 0.1 * k;
      worst = std::max(worst, std::abs(metric_eval(d, g(s), ab[1]) - (1.0 - s) * full) / full);
    }
  }
  return {"metric property " + label, worst <= 1e-8, fmt("max relative defect %.3g", worst)};
}

SuiteReport metrics_suite(gen::Rng& rng) {
  SuiteReport r{"metrics", {}};
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    const PsiFunction psi = PsiFunction::p_product(p);
    r.checks.push_back({"psi conditions " + psi.name, check_psi(psi, 20).all_passed(), ""});
  }
  const PsiFunction not_convex{"sqrt-sum", [](double x, double y) { return std::sqrt(x) + std::sqrt(y); }};
  r.checks.push_back({"psi rejects sqrt-sum", !check_psi(not_convex, 20).all_passed(), ""});

  const auto polar2 = MetricDescriptor::product(PsiFunction::p_product(2.0), Decomposition::Polar,
                                                MetricDescriptor::riemannian_spd(),
                                                MetricDescriptor::geodesic_so());
  r.checks.push_back(axioms("frobenius", MetricDescriptor::frobenius(), ClassTag::GeneralInvertible, 100, rng));
  r.checks.push_back(axioms("riemannian_spd", MetricDescriptor::riemannian_spd(), ClassTag::SPD, 100, rng));
  r.checks.push_back(axioms("geodesic_so", MetricDescriptor::geodesic_so(), ClassTag::SO, 100, rng));
  r.checks.push_back(axioms("hybrid_dH(1)", MetricDescriptor::hybrid(1.0), ClassTag::SPD, 100, rng));
  r.checks.push_back(axioms("p-product(2)", polar2, ClassTag::GeneralInvertible, 100, rng));

  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Matrix a = gen::spd(3, rng), q = gen::so(3, rng);
    worst = std::max(worst, metric_eval(MetricDescriptor::procrustes(), a, q.transpose() * a * q));
  }
  r.checks.push_back({"procrustes orthogonal invariance", worst <= 1e-10, fmt("max d_S %.3g", worst)});

  const Tolerance tol;
  auto class_geo = [&](ClassTag tag) {
    return [tag, tol](const Matrix& a, const Matrix& b) { return geodesic(tag, a, b, tol); };
  };
  r.checks.push_back(metric_property("spd", ClassTag::SPD, MetricDescriptor::riemannian_spd(), class_geo(ClassTag::SPD), 20, rng));
  r.checks.push_back(metric_property("so", ClassTag::SO, MetricDescriptor::geodesic_so(), class_geo(ClassTag::SO), 20, rng));
  r.checks.push_back(metric_property("diagonal", ClassTag::DiagonalPositive, MetricDescriptor::log_diag(), class_geo(ClassTag::DiagonalPositive), 20, rng));
  r.checks.push_back(metric_property(
      "polar product", ClassTag::GeneralInvertible, polar2,
      [](const Matrix& a, const Matrix& b) { return product_geodesic(Decomposition::Polar, a, b); }, 20, rng));
  return r;
}

SuiteReport operators_suite(gen::Rng& rng) {
  SuiteReport r{"operators", {}};
  const auto grid = uniform_grid(0.0, 1.0, kScanPoints);

  double worst = 0.0;
  for (ClassTag tag : {ClassTag::SPD, ClassTag::SO, ClassTag::DiagonalPositive,
                       ClassTag::UnitLowerTriangular}) {
    const ParamSamples s = walk_samples(tag, 3, 6, 0.5, rng);
    for (const OperatorSpec& op : {OperatorSpec::geodesic_piecewise(), OperatorSpec::log_exp_linear()}) {
      const Curve c = build_curve(op, s);
      for (std::size_t i = 0; i < s.size(); ++i)
        worst = std::max(worst, (c(s.t()[i]) - s[i]).norm() / s[i].norm());
    }
  }
  r.checks.push_back({"base operators interpolate", worst <= 1e-9, fmt("max relative residual %.3g", worst)});

  double min_det = INFINITY;
  for (int k = 0; k < 10; ++k) {
    const Curve c = polar_factory(OperatorSpec::geodesic_piecewise(), OperatorSpec::geodesic_piecewise())(
        walk_samples(ClassTag::GeneralInvertible, 3, 5, 0.8, rng));
    for (double t : grid) min_det = std::min(min_det, determinant(c(t)));
  }
  r.checks.push_back({"polar product keeps det > 0", min_det > 0.0, fmt("min det %.3g", min_det)});

  double spread = 0.0;
  bool spd_ok = true;
  {
    const Matrix a = gen::spd(3, rng);
    std::vector<Matrix> ms;
    Matrix q = Matrix::Identity(3, 3);
    for (int i = 0; i < 4; ++i) {
      ms.push_back(symmetrize(q.transpose() * a * q));
      q = q * so_exp(gen::skew(3, rng, 0.4));
    }
    const Curve c = spectral_conjugation_operator(OperatorSpec::geodesic_piecewise(),
                                                  OperatorSpec::geodesic_piecewise(),
                                                  ParamSamples(uniform_grid(0, 1, 4), ms, ClassTag::SPD));
    const Vector ref = symmetric_eigen(a).values;
    for (double t : grid) {
      const Matrix g = c(t);
      spd_ok = spd_ok && check_class(g, ClassTag::SPD).ok;
      spread = std::max(spread, (symmetric_eigen(g).values - ref).cwiseAbs().maxCoeff());
    }
  }
  r.checks.push_back({"spectral operator stays SPD", spd_ok, ""});
  r.checks.push_back({"spectral operator keeps the spectrum", spread <= 1e-9, fmt("max eigenvalue drift %.3g", spread)});

  bool signs_ok = true;
  for (int k = 0; k < 10; ++k) {
    std::vector<int> pattern(3);
    for (int& p : pattern) p = gen::uniform(rng, -1, 1) < 0 ? -1 : 1;
    std::vector<Matrix> ms;
    for (int i = 0; i < 4; ++i) ms.push_back(gen::with_minor_pattern(3, rng, pattern));
    const ParamSamples s(uniform_grid(0, 1, 4), ms, ClassTag::GeneralInvertible);
    const auto ref = minor_sign_vector(s[0]);
    const Curve c = ldu_sign_preserving_operator(s);
    for (double t : grid) signs_ok = signs_ok && minor_sign_vector(c(t)) == ref;
  }
  r.checks.push_back({"ldu operator keeps minor signs", signs_ok, ""});

  bool rejected = false;
  try {
    ldu_sign_preserving_operator(ParamSamples(
        {0.0, 1.0}, {gen::with_minor_pattern(3, rng, {1, 1, 1}), gen::with_minor_pattern(3, rng, {1, -1, 1})},
        ClassTag::GeneralInvertible));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::SignVectorMismatch;
  }
  r.checks.push_back({"ldu operator rejects mixed sign vectors", rejected, ""});
  return r;
}

SuiteReport theorem1_suite() {
  SuiteReport r{"theorem1", {}};
  const TruthFunction truth = truth_function("polar_curve");
  const auto fro = MetricDescriptor::frobenius();
  const auto g = OperatorSpec::geodesic_piecewise();
  const OrderReport low = approximation_order(truth, polar_factory(OperatorSpec::piecewise_constant(), g), fro);
  const OrderReport high = approximation_order(truth, polar_factory(g, g), fro);
  r.checks.push_back({"order min(1, 2) = 1", std::abs(low.slope - 1.0) <= 0.25, fmt("slope %.4f", low.slope)});
  r.checks.push_back({"order min(2, 2) = 2", std::abs(high.slope - 2.0) <= 0.25, fmt("slope %.4f", high.slope)});
  const OrderReport constant = approximation_order(truth_function("constant"), factory(g), MetricDescriptor::riemannian_spd());
  r.checks.push_back({"constant truth is exact", constant.exact, ""});
  return r;
}

SuiteReport prop2_suite(gen::Rng& rng) {
  SuiteReport r{"prop2", {}};
  const auto g = OperatorSpec::geodesic_piecewise();
  const CurveFactory scalar = factory(OperatorSpec::positive_scalar());
  const ParamSamples spd = walk_samples(ClassTag::SPD, 3, 5, 0.8, rng);
  const ParamSamples gl = walk_samples(ClassTag::GeneralInvertible, 3, 5, 0.8, rng);
  std::vector<double> alphas;
  for (int i = 0; i < 5; ++i) alphas.push_back(std::exp(gen::uniform(rng, -1.0, 1.0)));

  auto add = [&](const std::string& name, const CheckReport& c) {
    r.checks.push_back({name, c.passed, fmt("max discrepancy %.3g", c.max_discrepancy)});
  };
  add("det commutativity spd geodesic", check_det_commutativity(factory(g), spd, scalar));
  add("homogeneity spd geodesic", check_homogeneity(factory(g), spd, alphas, scalar));
  add("det commutativity polar product", check_det_commutativity(polar_factory(g, g), gl, scalar));
  add("homogeneity polar product", check_homogeneity(polar_factory(g, g), gl, alphas, scalar));
  return r;
}

SuiteReport alg1_suite(gen::Rng& rng) {
  SuiteReport r{"alg1", {}};
  const auto g = OperatorSpec::geodesic_piecewise();
  const ParamSamples s = walk_samples(ClassTag::LowerTriangularPosDiag, 3, 6, 0.5, rng);
  const Curve c = cholesky_product_data(g, s);
  bool shape = true;
  for (double t : uniform_grid(0, 1, kScanPoints))
    shape = shape && check_class(c(t), ClassTag::LowerTriangularPosDiag).ok;
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    worst = std::max(worst, (c(s.t()[i]) - s[i]).norm() / s[i].norm());
  r.checks.push_back({"output lower triangular, positive diagonal", shape, ""});
  r.checks.push_back({"interpolates samples", worst <= 1e-8, fmt("max relative residual %.3g", worst)});

  const OrderReport spd = approximation_order(truth_function("spd_bend_curve"), factory(g),
                                              MetricDescriptor::frobenius(ClassTag::SPD));
  const OrderReport tri = approximation_order(
      truth_function("lower_tri_curve"),
      [g](const ParamSamples& x) { return cholesky_product_data(g, x); },
      MetricDescriptor::frobenius(ClassTag::LowerTriangularPosDiag));
  r.checks.push_back({"order transfers from the SPD operator", std::abs(tri.slope - spd.slope) <= 0.25,
                      fmt("spd %.4f", spd.slope) + fmt(", triangular %.4f", tri.slope)});
  return r;
}

Matrix railway_gamma(double t) {
  Matrix q(2, 2);
  q << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return std::exp(t) * q;
}

SuiteReport counterexample_suite(std::uint64_t seed) {
  SuiteReport r{"counterexample", {}};
  const auto br = MetricDescriptor::british_railway();
  const auto fro = MetricDescriptor::frobenius();
  const Matrix g0 = railway_gamma(0.0);
  double min_br = INFINITY;
  for (double t : uniform_grid(0.0, 0.1, kScanPoints)) {
    if (t == 0.0) continue;
    min_br = std::min(min_br, metric_eval(br, railway_gamma(t), g0));
  }
  r.checks.push_back({"d_BR(gamma(t), gamma(0)) >= sqrt(2) on (0, 0.1]", min_br >= std::sqrt(2.0),
                      fmt("min %.6g", min_br)});

  bool decreasing = true;
  double prev = INFINITY, last = 0.0;
  for (int k = 1; k <= 10; ++k) {
    last = metric_eval(fro, railway_gamma(std::pow(10.0, -k)), g0);
    decreasing = decreasing && last < prev;
    prev = last;
  }
  r.checks.push_back({"frobenius distance tends to 0", decreasing && last <= 1e-9, fmt("at t = 1e-10: %.3g", last)});

  const MajorizationResult m = majorization_probe(br, fro, 200, 2, seed);
  r.checks.push_back({"d_BR not majorized by frobenius", m.unbounded,
                      fmt("adversarial ratio %.3g", m.adversarial_max_ratio)});
  return r;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  return {"metrics", "operators", "theorem1", "prop2", "alg1", "counterexample"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  gen::Rng rng(seed);
  if (name == "metrics") return metrics_suite(rng);
  if (name == "operators") return operators_suite(rng);
  if (name == "theorem1") return theorem1_suite();
  if (name == "prop2") return prop2_suite(rng);
  if (name == "alg1") return alg1_suite(rng);
  if (name == "counterexample") return counterexample_suite(seed);
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace mvf
