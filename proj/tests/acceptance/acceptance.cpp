// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "mvf/analysis.hpp"
#include "mvf/ellipsoid.hpp"
#include "mvf/errors.hpp"
#include "mvf/geodesic.hpp"
#include "mvf/metrics.hpp"
#include "mvf/product_operators.hpp"
#include "mvf/random.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>

using namespace mvf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const OperatorSpec kGeo = OperatorSpec::geodesic_piecewise();

CurveFactory polar_factory(const OperatorSpec& a, const OperatorSpec& b) {
  return [a, b](const ParamSamples& s) { return product_operator(Decomposition::Polar, {a, b}, s); };
}

MetricDescriptor polar_product(double p) {
  return MetricDescriptor::product(PsiFunction::p_product(p), Decomposition::Polar,
                                   MetricDescriptor::riemannian_spd(), MetricDescriptor::geodesic_so());
}

Outcome decomposition_round_trip() {
  gen::Rng rng(gen::kDefaultSeed);
  const auto t0 = Clock::now();
  double worst = 0.0;
  long class_failures = 0, runs = 0;
  for (Eigen::Index n = 2; n <= 8; ++n) {
    for (int k = 0; k < 1000; ++k) {
      const Matrix general = gen::gaussian(n, rng) + 0.5 * Matrix::Identity(n, n);
      const Matrix minors = gen::with_nonzero_minors(n, rng);
      const Matrix pos = gen::positive_det(n, rng, 2.0);
      const Matrix spd = gen::spd(n, rng, 2.0);
      const std::pair<Decomposition, const Matrix*> cases[] = {
          {Decomposition::QR, &general},       {Decomposition::LDU, &minors},
          {Decomposition::Polar, &pos},        {Decomposition::Spectral, &spd},
          {Decomposition::Cholesky, &spd}};
      for (const auto& [kind, a] : cases) {
        if (kind == Decomposition::QR && std::abs(oracle::cofactor_det(*a)) < 1e-8) continue;
        const Factorization f = decompose(kind, *a);
        worst = std::max(worst, (f.product() - *a).norm() / a->norm());
        for (const Factor& x : f.factors) class_failures += !check_class(x.matrix, x.tag).ok;
        ++runs;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 1e-9 && class_failures == 0 && elapsed <= 60.0,
          fmt("%.0f factorizations, max relative residual %.3g", runs, worst) +
              fmt(", class failures %.0f, %.1f s", class_failures, elapsed)};
}

// Symmetry, identity, positivity and triangle inequality on 1,000 triples.
double axiom_defect(const MetricDescriptor& d, ClassTag tag, gen::Rng& rng, bool pseudo = false) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Matrix a = gen::in_class(tag, 3, rng), b = gen::in_class(tag, 3, rng), c = gen::in_class(tag, 3, rng);
    const double ab = metric_eval(d, a, b), ba = metric_eval(d, b, a), bc = metric_eval(d, b, c),
                 ac = metric_eval(d, a, c), aa = metric_eval(d, a, a);
    const double scale = std::max({1.0, ab, bc, ac});
    worst = std::max({worst, std::abs(ab - ba) / scale, aa / scale, (ac - ab - bc) / scale});
    if (!pseudo && ab <= 1e-12) worst = std::max(worst, 1.0);
  }
  return worst;
}

Outcome metric_axioms() {
  gen::Rng rng(gen::kDefaultSeed + 2);
  struct Case {
    std::string name;
    MetricDescriptor d;
    ClassTag tag;
  };
  std::vector<Case> cases{{"frobenius", MetricDescriptor::frobenius(), ClassTag::GeneralInvertible},
                          {"riemannian_spd", MetricDescriptor::riemannian_spd(), ClassTag::SPD},
                          {"geodesic_so", MetricDescriptor::geodesic_so(), ClassTag::SO}};
  for (double beta : {0.1, 1.0, 10.0})
    cases.push_back({fmt("hybrid(%g)", beta), MetricDescriptor::hybrid(beta), ClassTag::SPD});
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()})
    cases.push_back({fmt("p_product(%g)", p), polar_product(p), ClassTag::GeneralInvertible});

  std::string failed;
  double worst = 0.0;
  for (const Case& c : cases) {
    const double w = axiom_defect(c.d, c.tag, rng);
    worst = std::max(worst, w);
    if (w > 1e-10) failed += " " + c.name;
  }
  const auto ds = MetricDescriptor::procrustes();
  const double pseudo = axiom_defect(ds, ClassTag::SPD, rng, true);
  double invariance = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Matrix a = gen::spd(3, rng), q = gen::so(3, rng);
    invariance = std::max(invariance, metric_eval(ds, a, q.transpose() * a * q));
  }
  if (pseudo > 1e-10 || invariance > 1e-10) failed += " procrustes";
  return {failed.empty(), fmt("%.0f metrics, worst defect %.3g", cases.size() + 1, std::max(worst, pseudo)) +
                              fmt(", max d_S(A, QtAQ) %.3g", invariance) + (failed.empty() ? "" : "; failed:" + failed)};
}

Outcome metric_property() {
  gen::Rng rng(gen::kDefaultSeed + 3);
  struct Case {
    std::string name;
    ClassTag tag;
    MetricDescriptor d;
    std::function<Geodesic(const Matrix&, const Matrix&)> make;
  };
  auto class_geo = [](ClassTag tag) {
    return [tag](const Matrix& a, const Matrix& b) { return geodesic(tag, a, b); };
  };
  const std::vector<Case> cases{
      {"spd", ClassTag::SPD, MetricDescriptor::riemannian_spd(), class_geo(ClassTag::SPD)},
      {"so", ClassTag::SO, MetricDescriptor::geodesic_so(), class_geo(ClassTag::SO)},
      {"diagonal", ClassTag::DiagonalPositive, MetricDescriptor::log_diag(), class_geo(ClassTag::DiagonalPositive)},
      {"polar", ClassTag::GeneralInvertible, polar_product(2.0),
       [](const Matrix& a, const Matrix& b) { return product_geodesic(Decomposition::Polar, a, b); }}};
  std::string out;
  bool ok = true;
  for (const Case& c : cases) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const auto ab = gen::walk(c.tag, 3, 2, 1.0, rng);
      const Geodesic g = c.make(ab[0], ab[1]);
      const double full = metric_eval(c.d, ab[0], ab[1]);
      for (int k = 1; k <= 9; ++k) {
        const double t = 0.1 * k;
        worst = std::max(worst, std::abs(metric_eval(c.d, g(t), ab[1]) - (1 - t) * full) / full);
      }
    }
    ok = ok && worst <= 1e-8;
    out += (out.empty() ? "" : ", ") + c.name + fmt(" %.3g", worst);
  }
  return {ok, "max relative defect " + out};
}

Outcome product_geodesic_proposition() {
  gen::Rng rng(gen::kDefaultSeed + 4);
  bool ok = true;
  std::string out;
  for (double p : {1.0, 2.0}) {
    const MetricDescriptor d = polar_product(p);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const auto ab = gen::walk(ClassTag::GeneralInvertible, 3, 2, 1.0, rng);
      const Geodesic g = product_geodesic(Decomposition::Polar, ab[0], ab[1]);
      const double full = metric_eval(d, ab[0], ab[1]);
      for (int k = 1; k <= 9; ++k) {
        const double t = 0.1 * k;
        worst = std::max(worst, std::abs(metric_eval(d, ab[0], g(t)) - t * full) / full);
      }
    }
    ok = ok && worst <= 1e-8;
    out += (out.empty() ? "max relative defect " : ", ") + fmt("p=%g %.3g", p, worst);
  }
  return {ok, out};
}

Outcome min_rule() {
  const auto t0 = Clock::now();
  const TruthFunction truth = truth_function("polar_curve");
  const auto fro = MetricDescriptor::frobenius();
  const OrderReport low = approximation_order(truth, polar_factory(OperatorSpec::piecewise_constant(), kGeo), fro);
  const OrderReport high = approximation_order(truth, polar_factory(kGeo, kGeo), fro);
  const double elapsed = seconds_since(t0);
  const bool ok = !low.exact && !high.exact && low.h.size() >= 5 && std::abs(low.slope - 1.0) <= 0.25 &&
                  std::abs(high.slope - 2.0) <= 0.25 && elapsed <= 120.0;
  return {ok, fmt("(1,2) slope %.4f, (2,2) slope %.4f, %.1f s", low.slope, high.slope, elapsed)};
}

Outcome determinant_preservation() {
  gen::Rng rng(gen::kDefaultSeed + 6);
  double min_det = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    std::vector<Matrix> ms;
    for (int i = 0; i < 5; ++i) ms.push_back(gen::positive_det(3, rng, 1.5));
    const Curve c = product_operator(Decomposition::Polar, {kGeo, kGeo},
                                     ParamSamples(uniform_grid(0, 1, 5), ms, ClassTag::GeneralInvertible));
    for (double t : uniform_grid(0, 1, 1001)) min_det = std::min(min_det, oracle::cofactor_det(c(t)));
  }
  return {min_det > 0.0, fmt("min det over 100 sets x 1001 points %.3g", min_det)};
}

Outcome spectral_rigidity() {
  gen::Rng rng(gen::kDefaultSeed + 7);
  double drift = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Matrix a = gen::spd(3, rng, 1.5), q = gen::so(3, rng);
    const ParamSamples s({0.0, 1.0}, {a, q.transpose() * a * q}, ClassTag::SPD);
    const Curve c = spectral_conjugation_operator(kGeo, kGeo, s);
    const Eigen::VectorXd ref = oracle::jacobi_eigenvalues(a);
    for (double t : uniform_grid(0, 1, 1001))
      drift = std::max(drift, (oracle::jacobi_eigenvalues(c(t)) - ref).cwiseAbs().maxCoeff() / ref.maxCoeff());
  }
  const EllipsoidDemo demo = ellipsoid_demo();
  double demo_drift = 0.0;
  for (const auto& f : demo.rotation)
    demo_drift = std::max(demo_drift, (f.eigenvalues - demo.rotation[0].eigenvalues).cwiseAbs().maxCoeff());
  auto ratio = [](const EllipsoidFrame& f) { return f.eigenvalues.minCoeff() / f.eigenvalues.maxCoeff(); };
  const EllipsoidFrame& mid = demo.riemannian[demo.riemannian.size() / 2];
  const bool changed = mid.t == 0.5 && std::abs(ratio(mid) - ratio(demo.riemannian[0])) > 1e-3;
  return {drift <= 1e-9 && demo_drift <= 1e-9 && changed,
          fmt("eigenvalue drift %.3g (random), %.3g (figure data); riemannian ratio at t=0.5 %.4f", drift, demo_drift,
              ratio(mid)) +
              fmt(" vs %.4f at t=0", ratio(demo.riemannian[0]))};
}

Outcome sign_preservation() {
  gen::Rng rng(gen::kDefaultSeed + 8);
  long changes = 0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Index n = 2 + k % 4;
    std::vector<int> signs(n);
    for (int& x : signs) x = gen::uniform(rng, -1, 1) < 0 ? -1 : 1;
    std::vector<Matrix> ms;
    for (int i = 0; i < 5; ++i) ms.push_back(gen::with_minor_pattern(n, rng, signs));
    const ParamSamples s(uniform_grid(0, 1, 5), ms, ClassTag::GeneralInvertible);
    const auto ref = minor_sign_vector(s[0]);
    const Curve c = ldu_sign_preserving_operator(s);
    for (double t : uniform_grid(0, 1, 1001)) changes += minor_sign_vector(c(t)) != ref;
  }
  bool rejected = false;
  try {
    ldu_sign_preserving_operator(ParamSamples({0.0, 1.0}, {oracle::diag({1, 1}), oracle::diag({-1, 1})},
                                              ClassTag::GeneralInvertible));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::SignVectorMismatch;
  }
  return {changes == 0 && rejected, fmt("sign changes %.0f over 100 sets x 1001 points", changes) +
                                        ", mixed input rejected: " + (rejected ? "yes" : "no")};
}

Outcome algorithm1() {
  gen::Rng rng(gen::kDefaultSeed + 9);
  long shape_failures = 0;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Index n = 2 + k % 4;
    const ParamSamples s(uniform_grid(0, 1, 6), gen::walk(ClassTag::LowerTriangularPosDiag, n, 6, 0.5, rng),
                         ClassTag::LowerTriangularPosDiag);
    const Curve c = cholesky_product_data(kGeo, s);
    for (double t : uniform_grid(0, 1, 1001)) shape_failures += !check_class(c(t), ClassTag::LowerTriangularPosDiag).ok;
    for (std::size_t i = 0; i < s.size(); ++i) worst = std::max(worst, (c(s.t()[i]) - s[i]).norm() / s[i].norm());
  }
  const OrderReport spd = approximation_order(truth_function("spd_bend_curve"), factory(kGeo),
                                              MetricDescriptor::frobenius(ClassTag::SPD));
  const OrderReport tri = approximation_order(
      truth_function("lower_tri_curve"), [](const ParamSamples& x) { return cholesky_product_data(kGeo, x); },
      MetricDescriptor::frobenius(ClassTag::LowerTriangularPosDiag));
  const bool ok = shape_failures == 0 && worst <= 1e-8 && !tri.exact && std::abs(tri.slope - spd.slope) <= 0.25;
  return {ok, fmt("shape failures %.0f, max interpolation residual %.3g", shape_failures, worst) +
                  fmt(", order spd %.4f vs triangular %.4f", spd.slope, tri.slope)};
}

Outcome inheritance() {
  gen::Rng rng(gen::kDefaultSeed + 10);
  const CurveFactory scalar = factory(OperatorSpec::positive_scalar());
  const CurveFactory geo = factory(kGeo);
  bool factors_ok = true, product_ok = true;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto gl = gen::walk(ClassTag::GeneralInvertible, 3, 5, 0.8, rng);
    std::vector<Matrix> ps, qs;
    for (const Matrix& a : gl) {
      const Factorization f = polar(a);
      ps.push_back(f.factors[0].matrix);
      qs.push_back(f.factors[1].matrix);
    }
    const auto t = uniform_grid(0, 1, 5);
    std::vector<double> alphas;
    for (int i = 0; i < 5; ++i) alphas.push_back(std::exp(gen::uniform(rng, -1.0, 1.0)));
    const ParamSamples sp(t, ps, ClassTag::SPD), sq(t, qs, ClassTag::SO), sg(t, gl, ClassTag::GeneralInvertible);
    // Homogeneity of the SO factor is with the unit scalar, so only the
    // SPD factor carries alpha.
    factors_ok = factors_ok && check_det_commutativity(geo, sp, scalar).passed &&
                 check_homogeneity(geo, sp, alphas, scalar).passed &&
                 check_det_commutativity(geo, sq, scalar).passed;
    const CheckReport d = check_det_commutativity(polar_factory(kGeo, kGeo), sg, scalar);
    const CheckReport h = check_homogeneity(polar_factory(kGeo, kGeo), sg, alphas, scalar);
    product_ok = product_ok && d.passed && h.passed;
    worst = std::max({worst, d.max_discrepancy, h.max_discrepancy});
  }
  return {factors_ok && product_ok,
          std::string("factor operators ") + (factors_ok ? "pass" : "FAIL") + fmt(", product max discrepancy %.3g", worst)};
}

Matrix railway(double t) {
  Matrix q(2, 2);
  q << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return std::exp(t) * q;
}

Outcome counterexample() {
  const auto br = MetricDescriptor::british_railway();
  const auto fro = MetricDescriptor::frobenius();
  const Matrix g0 = railway(0.0);
  double min_br = std::numeric_limits<double>::infinity(), max_fro = 0.0;
  for (double t : uniform_grid(0.0, 0.1, 1001)) {
    if (t == 0.0) continue;
    min_br = std::min(min_br, metric_eval(br, railway(t), g0));
    max_fro = std::max(max_fro, metric_eval(fro, railway(t), g0));
  }
  const MajorizationResult m = majorization_probe(br, fro, 200, 2);
  const bool ok = min_br >= std::sqrt(2.0) && max_fro <= 0.2 && m.unbounded;
  return {ok, fmt("min d_BR %.6f, max frobenius %.6f (bound 0.2), adversarial ratio %.3g", min_br, max_fro,
                  m.adversarial_max_ratio) + (m.unbounded ? ", unbounded" : ", bounded")};
}

Outcome holder() {
  const HolderReport root = holder_exponent(truth_function("sqrt_rot").as_curve(), MetricDescriptor::geodesic_so());
  bool ok = std::abs(root.alpha - 0.5) <= 0.1;
  std::string out = fmt("sqrt_rot %.4f", root.alpha);
  for (const char* id : {"spd_exp_curve", "spd_bend_curve", "rot_curve"}) {
    const TruthFunction f = truth_function(id);
    const HolderReport r = holder_exponent(geodesic_piecewise(f.sample(8)), class_metric(f.tag));
    ok = ok && r.alpha >= 0.95;
    out += std::string(", ") + id + fmt(" %.4f", r.alpha);
  }
  return {ok, out};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"decomposition round trip", decomposition_round_trip},
      {"metric axioms", metric_axioms},
      {"metric property of geodesics", metric_property},
      {"product geodesic proposition", product_geodesic_proposition},
      {"theorem 1 min rule", min_rule},
      {"polar determinant preservation", determinant_preservation},
      {"spectral rigidity", spectral_rigidity},
      {"ldu sign preservation", sign_preservation},
      {"algorithm 1 product data", algorithm1},
      {"property inheritance", inheritance},
      {"british railway counterexample", counterexample},
      {"holder estimator", holder},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.passed;
    std::printf("[%s] %2d %s: %s\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
