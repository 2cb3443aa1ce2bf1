#include "mvf/errors.hpp"
#include "mvf/io.hpp"
#include "mvf/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace mvf;

TEST(SampleFile, RoundTrip) {
  gen::Rng rng(61);
  const ParamSamples s(uniform_grid(0, 1, 4), gen::walk(ClassTag::SPD, 3, 4, 0.7, rng), ClassTag::SPD);
  const ParamSamples back = io::parse_sample_file(io::write_sample_file(s));
  ASSERT_EQ(back.size(), s.size());
  EXPECT_EQ(back.tag(), ClassTag::SPD);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(back.t()[i], s.t()[i]);
    EXPECT_TRUE(back[i] == s[i]);
  }
}

TEST(SampleFile, Rejections) {
  EXPECT_THROW(io::parse_sample_file("{"), Error);
  EXPECT_THROW(io::parse_sample_file(R"({"n":2,"class":"SPD","t":[0],"matrices":[[[1,0]]]})"), Error);
  EXPECT_THROW(io::parse_sample_file(R"({"n":2,"class":"nope","t":[0],"matrices":[[[1,0],[0,1]]]})"), Error);
  try {
    io::parse_sample_file(R"({"n":2,"class":"SPD","t":[0,1],"matrices":[[[1,0],[0,1]],[[1,0],[0,-1]]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassViolation);
    EXPECT_EQ(e.sample(), 1);
  }
}

TEST(CurveCsv, RoundTripIsBitExact) {
  gen::Rng rng(62);
  const auto ms = gen::walk(ClassTag::GeneralInvertible, 3, 5, 0.7, rng);
  const auto t = uniform_grid(0, 1, 5);
  const std::string csv = io::write_curve_csv(t, ms);
  EXPECT_EQ(csv.rfind("t,a1_1,a1_2,a1_3,a2_1", 0), 0u);
  const ParamSamples back = io::parse_curve_csv(csv, ClassTag::GeneralInvertible);
  for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_TRUE(back[i] == ms[i]);
  EXPECT_EQ(io::write_curve_csv(back.t(), back.matrices()), csv);
}

TEST(DiagnosticsCsv, Columns) {
  const std::string csv = io::write_diagnostics_csv({0.0}, {oracle::diag({2, -3})});
  const auto nl = csv.find('\n');
  ASSERT_NE(nl, std::string::npos);
  const std::string row = csv.substr(nl + 1);
  EXPECT_EQ(row.rfind("0,-6,1,-1,", 0), 0u) << row;
}

TEST(OperatorConfig, Parsing) {
  const io::OperatorConfig polar = io::parse_operator_config(R"({"operator":"polar"})");
  EXPECT_EQ(polar.mode, io::OperatorMode::Product);
  EXPECT_EQ(polar.factors.size(), 2u);
  EXPECT_EQ(polar.grid_count, 101u);

  const io::OperatorConfig base = io::parse_operator_config(
      R"({"operator":"bernstein","degree":3,"grid":{"count":11},"diagnostics":true})");
  EXPECT_EQ(base.mode, io::OperatorMode::Base);
  EXPECT_EQ(base.factors.at(0).name(), "bernstein(degree=3)");
  EXPECT_EQ(base.grid_count, 11u);
  EXPECT_TRUE(base.diagnostics);

  const io::OperatorConfig mixed = io::parse_operator_config(
      R"({"operator":"polar","factors":[{"kind":"piecewise_constant"},{"kind":"geodesic_piecewise"}]})");
  EXPECT_EQ(mixed.factors.at(0).claimed_order(), 1);

  for (const char* bad : {"[", R"({"operator":"cholesky"})", R"({"operator":"svd"})",
                          R"({"operator":"polar","factors":[{"kind":"geodesic_piecewise"}]})",
                          R"({"operator":"bernstein"})", R"({"operator":"polar","grid":{"count":1}})"}) {
    EXPECT_THROW(io::parse_operator_config(bad), Error) << bad;
  }
}

TEST(Json, Reports) {
  const auto j = nlohmann::json::parse(io::suite_json(run_suite("metrics")));
  EXPECT_EQ(j["suite"], "metrics");
  EXPECT_TRUE(j["passed"].get<bool>());
  const auto e = nlohmann::json::parse(io::ellipsoid_json(ellipsoid_demo()));
  EXPECT_EQ(e["frames"].size(), 11u);
}
