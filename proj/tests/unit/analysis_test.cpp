#include "mvf/analysis.hpp"
#include "mvf/ellipsoid.hpp"
#include "mvf/errors.hpp"
#include "mvf/product_operators.hpp"
#include "mvf/random.hpp"
#include "mvf/suites.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mvf;

namespace {

const OperatorSpec kGeo = OperatorSpec::geodesic_piecewise();

CurveFactory polar_factory(OperatorSpec a, OperatorSpec b) {
  return [a, b](const ParamSamples& s) { return product_operator(Decomposition::Polar, {a, b}, s); };
}

}  // namespace

TEST(Order, ConstantIsExact) {
  const OrderReport r = approximation_order(truth_function("constant"), factory(kGeo), MetricDescriptor::riemannian_spd());
  EXPECT_TRUE(r.exact);
  for (double e : r.errors) EXPECT_LE(e, 1e-10);
}

TEST(Order, SubgroupTruthIsReproduced) {
  // exp(tS) is itself a geodesic, so halving the mesh has nothing to measure.
  const OrderReport r = approximation_order(truth_function("spd_exp_curve"), factory(kGeo), MetricDescriptor::riemannian_spd());
  EXPECT_TRUE(r.exact);
  TruthFunction diag_exp{"diag_exp", 0.0, 1.0, ClassTag::SPD, 2,
                         [](double t) { return oracle::diag({std::exp(t), std::exp(2 * t)}); }};
  EXPECT_TRUE(approximation_order(diag_exp, factory(kGeo), MetricDescriptor::riemannian_spd()).exact);
}

TEST(Order, GeodesicOnCurvedTruth) {
  const OrderReport r = approximation_order(truth_function("spd_bend_curve"), factory(kGeo), MetricDescriptor::riemannian_spd());
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(r.slope, 2.0, 0.25);
  EXPECT_EQ(r.h.size(), 5u);
  for (std::size_t k = 1; k < r.h.size(); ++k) EXPECT_LT(r.h[k], r.h[k - 1]);
}

TEST(Order, MinRule) {
  const auto truth = truth_function("polar_curve");
  const auto fro = MetricDescriptor::frobenius();
  EXPECT_NEAR(approximation_order(truth, polar_factory(kGeo, kGeo), fro).slope, 2.0, 0.25);
  EXPECT_NEAR(approximation_order(truth, polar_factory(OperatorSpec::piecewise_constant(), kGeo), fro).slope, 1.0, 0.25);
  EXPECT_NEAR(approximation_order(truth, polar_factory(kGeo, OperatorSpec::piecewise_constant()), fro).slope, 1.0, 0.25);
}

TEST(Order, Validation) {
  EXPECT_THROW(approximation_order(truth_function("constant"), factory(kGeo), MetricDescriptor::riemannian_spd(), 3), Error);
  EXPECT_THROW(truth_function("nope"), Error);
  for (const auto& id : truth_ids()) {
    const TruthFunction f = truth_function(id);
    for (double t : uniform_grid(f.t_min, f.t_max, 11)) EXPECT_TRUE(check_class(f(t), f.tag).ok) << id;
  }
}

TEST(LogLogFit, RecoversPowerLaw) {
  const auto [slope, c] = loglog_fit({1, 2, 4, 8}, {3, 12, 48, 192});
  EXPECT_NEAR(slope, 2.0, 1e-12);
  EXPECT_NEAR(c, 3.0, 1e-12);
}

TEST(Holder, Estimates) {
  const HolderReport sqrt_rot = holder_exponent(truth_function("sqrt_rot").as_curve(), MetricDescriptor::geodesic_so());
  EXPECT_NEAR(sqrt_rot.alpha, 0.5, 0.1);
  EXPECT_EQ(sqrt_rot.deltas.size(), 11u);

  const Curve g = geodesic_piecewise(truth_function("spd_bend_curve").sample(8));
  EXPECT_GE(holder_exponent(g, MetricDescriptor::riemannian_spd()).alpha, 0.95);

  const Curve k = geodesic_piecewise(truth_function("constant").sample(4));
  EXPECT_TRUE(holder_exponent(k, MetricDescriptor::riemannian_spd()).exact);

  // Dense piecewise-geodesic samples of rot(sqrt t) keep the 1/2 envelope.
  const Curve dense = geodesic_piecewise(truth_function("sqrt_rot").sample(1 << 16));
  EXPECT_NEAR(holder_exponent(dense, MetricDescriptor::geodesic_so()).alpha, 0.5, 0.1);
}

TEST(DetCommutativity, Cases) {
  gen::Rng rng(51);
  const CurveFactory scalar = factory(OperatorSpec::positive_scalar());
  const ParamSamples spd(uniform_grid(0, 1, 5), gen::walk(ClassTag::SPD, 3, 5, 0.8, rng), ClassTag::SPD);
  EXPECT_TRUE(check_det_commutativity(factory(kGeo), spd, scalar).passed);
  const ParamSamples so(uniform_grid(0, 1, 5), gen::walk(ClassTag::SO, 3, 5, 0.8, rng), ClassTag::SO);
  EXPECT_TRUE(check_det_commutativity(factory(kGeo), so, scalar).passed);
  const ParamSamples gl(uniform_grid(0, 1, 5), gen::walk(ClassTag::GeneralInvertible, 3, 5, 0.8, rng),
                        ClassTag::GeneralInvertible);
  EXPECT_TRUE(check_det_commutativity(polar_factory(kGeo, kGeo), gl, scalar).passed);
  // Piecewise-constant scalar interpolation does not match the geodesic.
  EXPECT_FALSE(check_det_commutativity(factory(kGeo), spd, factory(OperatorSpec::piecewise_constant())).passed);
}

TEST(Homogeneity, Cases) {
  gen::Rng rng(52);
  const CurveFactory scalar = factory(OperatorSpec::positive_scalar());
  const ParamSamples spd(uniform_grid(0, 1, 4), gen::walk(ClassTag::SPD, 3, 4, 0.8, rng), ClassTag::SPD);
  EXPECT_TRUE(check_homogeneity(factory(kGeo), spd, {1, 1, 1, 1}, scalar).passed);
  EXPECT_TRUE(check_homogeneity(factory(kGeo), spd, {0.3, 2.0, 5.0, 0.9}, scalar).passed);
  const ParamSamples one(uniform_grid(0, 1, 3), {Matrix::Constant(1, 1, 2.0), Matrix::Constant(1, 1, 5.0), Matrix::Constant(1, 1, 3.0)},
                         ClassTag::PositiveScalar1x1);
  EXPECT_TRUE(check_homogeneity(scalar, one, {7, 7, 7}, scalar).passed);
  try {
    check_homogeneity(factory(kGeo), spd, {1, -1, 1, 1}, scalar);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassViolation);
  }
}

TEST(Ellipsoid, Demo) {
  const EllipsoidDemo d = ellipsoid_demo();
  ASSERT_EQ(d.rotation.size(), 11u);
  ASSERT_EQ(d.riemannian.size(), 11u);
  const Eigen::Vector3d spectrum(1, 4, 9);
  EXPECT_LT((d.rotation[0].eigenvalues - spectrum).norm(), 1e-12);
  EXPECT_LT((d.riemannian[0].eigenvalues - spectrum).norm(), 1e-12);
  EXPECT_LT((d.rotation[0].axes - d.riemannian[0].axes).norm(), 1e-12);
  for (const auto& f : d.rotation) {
    EXPECT_LT((f.eigenvalues - spectrum).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_TRUE(check_class(f.axes, ClassTag::SO).ok);
  }
  auto ratio = [](const EllipsoidFrame& f) { return f.eigenvalues.minCoeff() / f.eigenvalues.maxCoeff(); };
  EXPECT_GT(ratio(d.riemannian[5]), ratio(d.riemannian[0]));
}

TEST(Suites, AllPass) {
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name);
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
  }
  EXPECT_THROW(run_suite("nope"), Error);
}
