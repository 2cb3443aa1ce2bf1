#pragma once

#include "mvf/analysis.hpp"
#include "mvf/decompositions.hpp"
#include "mvf/ellipsoid.hpp"
#include "mvf/operators.hpp"
#include "mvf/suites.hpp"

#include <string>
#include <vector>

// Text formats. JSON goes through nlohmann::json (doubles print with 17
// significant digits); CSV rows are written with %.17g. Malformed input
// throws Error(Parse).
namespace mvf::io {

// {"n": 2, "class": "SPD", "t": [...], "matrices": [[[row], [row]], ...]}
ParamSamples parse_sample_file(const std::string& text, const Tolerance& tol = {});
std::string write_sample_file(const ParamSamples& samples);

// Header "t,a11,a12,...", then one row per evaluation point.
std::string write_curve_csv(const std::vector<double>& t, const std::vector<Matrix>& values);
// Reads write_curve_csv output back into samples of the given class.
ParamSamples parse_curve_csv(const std::string& text, ClassTag tag, const Tolerance& tol = {});

// t, det, sign of each leading principal minor, eigenvalues (real and
// imaginary parts, sorted by real part then imaginary part).
std::string write_diagnostics_csv(const std::vector<double>& t, const std::vector<Matrix>& values);

enum class OperatorMode { Base, Product, Spectral, Ldu, CholeskyProductData };

struct OperatorConfig {
  OperatorMode mode = OperatorMode::Base;
  Decomposition decomposition = Decomposition::Polar;  // Product only
  std::vector<OperatorSpec> factors;                   // Base: exactly one
  std::size_t grid_count = 101;
  bool diagnostics = false;

  CurveFactory factory() const;
  std::string name() const;
};

// {"operator": "polar" | "qr" | "spectral" | "ldu" | "cholesky_product_data"
//              | <base operator kind>,
//  "factors": [{"kind": ..., "degree": ..., "inner": {...}}, ...],
//  "degree": ..., "inner": {...},          (base operators)
//  "grid": {"count": N}, "diagnostics": bool}
// Missing "factors" picks per-mode defaults.
OperatorConfig parse_operator_config(const std::string& text);

std::string factorization_json(Decomposition kind, const ParamSamples& samples,
                               const std::vector<Factorization>& factorizations);
std::string order_report_json(const std::string& truth_id, const OperatorConfig& config,
                              const std::string& metric_name, const OrderReport& report);
std::string ellipsoid_json(const EllipsoidDemo& demo);
std::string suite_json(const SuiteReport& report);

}  // namespace mvf::io
