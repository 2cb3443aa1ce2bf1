#include "mvf/io.hpp"

#include "mvf/errors.hpp"
#include "mvf/product_operators.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <complex>
#include <cstdio>
#include <sstream>

namespace mvf::io {
namespace {

using json = nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Eigen::Index n, std::size_t index) {
  const std::string where = "matrices[" + std::to_string(index) + "]";
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
    parse_error(where + ": expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      parse_error(where + " row " + std::to_string(r) + ": expected " + std::to_string(n) + " entries");
    for (Eigen::Index c = 0; c < n; ++c) {
      if (!row[c].is_number()) parse_error(where + ": non-numeric entry");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

OperatorSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    parse_error("operator spec needs a string \"kind\"");
  const std::string kind = j["kind"];
  if (kind == "geodesic_piecewise") return OperatorSpec::geodesic_piecewise();
  if (kind == "log_exp_linear") return OperatorSpec::log_exp_linear();
  if (kind == "positive_scalar") return OperatorSpec::positive_scalar();
  if (kind == "piecewise_constant") return OperatorSpec::piecewise_constant();
  if (kind == "bernstein") {
    if (!j.contains("degree") || !j["degree"].is_number_integer())
      parse_error("bernstein needs an integer \"degree\"");
    return OperatorSpec::bernstein(j["degree"].get<int>());
  }
  if (kind == "diagonal_elementwise") {
    const OperatorSpec inner = j.contains("inner") ? spec_from_json(j["inner"])
                                                   : OperatorSpec::positive_scalar();
    return OperatorSpec::diagonal_elementwise(inner);
  }
  parse_error("unknown operator kind '" + kind + "'");
}

std::vector<OperatorSpec> default_factors(OperatorMode mode, Decomposition d) {
  const auto g = OperatorSpec::geodesic_piecewise();
  switch (mode) {
    case OperatorMode::Product:
      // No base operator acts on upper triangular matrices with positive
      // diagonal besides the piecewise-constant one.
      return d == Decomposition::QR ? std::vector{g, OperatorSpec::piecewise_constant()}
                                    : std::vector{g, g};
    case OperatorMode::Spectral: return {g, g};
    case OperatorMode::Ldu:
      return {OperatorSpec::log_exp_linear(),
              OperatorSpec::diagonal_elementwise(OperatorSpec::positive_scalar()),
              OperatorSpec::log_exp_linear()};
    case OperatorMode::CholeskyProductData: return {g};
    case OperatorMode::Base: break;
  }
  return {g};
}

std::size_t expected_factors(OperatorMode mode) {
  switch (mode) {
    case OperatorMode::Base:
    case OperatorMode::CholeskyProductData: return 1;
    case OperatorMode::Product:
    case OperatorMode::Spectral: return 2;
    case OperatorMode::Ldu: return 3;
  }
  return 1;
}

std::string mode_name(OperatorMode mode, Decomposition d) {
  switch (mode) {
    case OperatorMode::Product: return std::string(to_string(d));
    case OperatorMode::Spectral: return "spectral";
    case OperatorMode::Ldu: return "ldu";
    case OperatorMode::CholeskyProductData: return "cholesky_product_data";
    case OperatorMode::Base: break;
  }
  return "base";
}

}  // namespace

ParamSamples parse_sample_file(const std::string& text, const Tolerance& tol) {
  const json j = parse_json(text, "sample file");
  if (!j.is_object()) parse_error("sample file: expected an object");
  for (const char* key : {"n", "class", "t", "matrices"})
    if (!j.contains(key)) parse_error(std::string("sample file: missing \"") + key + "\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) parse_error("sample file: \"n\" must be a positive integer");
  if (!j["class"].is_string()) parse_error("sample file: \"class\" must be a string");
  if (!j["t"].is_array() || !j["matrices"].is_array()) parse_error("sample file: \"t\" and \"matrices\" must be arrays");

  const Eigen::Index n = j["n"].get<long>();
  ClassTag tag;
  try {
    tag = class_tag_from_string(j["class"].get<std::string>());
  } catch (const Error& e) {
    parse_error(std::string("sample file: ") + e.what());
  }
  std::vector<double> t;
  for (const json& x : j["t"]) {
    if (!x.is_number()) parse_error("sample file: non-numeric t");
    t.push_back(x.get<double>());
  }
  if (j["matrices"].size() != t.size())
    parse_error("sample file: " + std::to_string(t.size()) + " abscissae but " +
                std::to_string(j["matrices"].size()) + " matrices");
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < t.size(); ++i) ms.push_back(matrix_from_json(j["matrices"][i], n, i));
  return ParamSamples(std::move(t), std::move(ms), tag, tol);
}

std::string write_sample_file(const ParamSamples& samples) {
  json ms = json::array();
  for (const Matrix& m : samples.matrices()) ms.push_back(matrix_json(m));
  return json{{"n", samples.order()},
              {"class", std::string(to_string(samples.tag()))},
              {"t", samples.t()},
              {"matrices", ms}}
             .dump(2);
}

std::string write_curve_csv(const std::vector<double>& t, const std::vector<Matrix>& values) {
  std::string out = "t";
  const Eigen::Index n = values.empty() ? 0 : values.front().rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out += ",a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  out += '\n';
  for (std::size_t k = 0; k < t.size(); ++k) {
    out += g17(t[k]);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out += ',' + g17(values[k](i, j));
    out += '\n';
  }
  return out;
}

ParamSamples parse_curve_csv(const std::string& text, ClassTag tag, const Tolerance& tol) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> t;
  std::vector<Matrix> ms;
  Eigen::Index n = -1;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 't') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size() && cell.find_first_not_of(" \r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        parse_error("csv line " + std::to_string(line_no) + ": bad number '" + cell + "'");
      }
    }
    const auto entries = static_cast<Eigen::Index>(row.size()) - 1;
    const auto order = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(std::max<Eigen::Index>(entries, 0)))));
    if (entries < 1 || order * order != entries)
      parse_error("csv line " + std::to_string(line_no) + ": expected t plus n^2 entries");
    if (n >= 0 && order != n) parse_error("csv line " + std::to_string(line_no) + ": order changes");
    n = order;
    t.push_back(row[0]);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[1 + i * n + j];
    ms.push_back(std::move(m));
  }
  if (t.empty()) parse_error("csv: no data rows");
  return ParamSamples(std::move(t), std::move(ms), tag, tol);
}

std::string write_diagnostics_csv(const std::vector<double>& t, const std::vector<Matrix>& values) {
  const Eigen::Index n = values.empty() ? 0 : values.front().rows();
  std::string out = "t,det";
  for (Eigen::Index i = 0; i < n; ++i) out += ",minor_sign" + std::to_string(i + 1);
  for (Eigen::Index i = 0; i < n; ++i)
    out += ",eig" + std::to_string(i + 1) + "_re,eig" + std::to_string(i + 1) + "_im";
  out += '\n';
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Matrix& m = values[k];
    out += g17(t[k]) + ',' + g17(determinant(m));
    for (double p : principal_minors(m)) out += p > 0 ? ",1" : (p < 0 ? ",-1" : ",0");
    std::vector<std::complex<double>> eig;
    if (m.isApprox(m.transpose(), 1e-12)) {
      const Vector v = symmetric_eigen(m).values;
      for (Eigen::Index i = 0; i < n; ++i) eig.emplace_back(v(i), 0.0);
    } else {
      const Eigen::VectorXcd v = Eigen::EigenSolver<Matrix>(m, false).eigenvalues();
      for (Eigen::Index i = 0; i < n; ++i) eig.push_back(v(i));
    }
    std::sort(eig.begin(), eig.end(), [](const auto& a, const auto& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (const auto& e : eig) out += ',' + g17(e.real()) + ',' + g17(e.imag());
    out += '\n';
  }
  return out;
}

OperatorConfig parse_operator_config(const std::string& text) {
  const json j = parse_json(text, "operator config");
  if (!j.is_object() || !j.contains("operator") || !j["operator"].is_string())
    parse_error("operator config needs a string \"operator\"");
  const std::string op = j["operator"];
  OperatorConfig c;
  if (op == "polar" || op == "qr") {
    c.mode = OperatorMode::Product;
    c.decomposition = decomposition_from_string(op);
  } else if (op == "spectral") {
    c.mode = OperatorMode::Spectral;
    c.decomposition = Decomposition::Spectral;
  } else if (op == "ldu") {
    c.mode = OperatorMode::Ldu;
    c.decomposition = Decomposition::LDU;
  } else if (op == "cholesky_product_data") {
    c.mode = OperatorMode::CholeskyProductData;
    c.decomposition = Decomposition::Cholesky;
  } else if (op == "cholesky") {
    parse_error("cholesky factors are not independent; use \"cholesky_product_data\"");
  } else {
    json spec = j;
    spec["kind"] = op;
    c.factors = {spec_from_json(spec)};
  }

  if (c.mode != OperatorMode::Base) {
    if (j.contains("factors")) {
      if (!j["factors"].is_array()) parse_error("\"factors\" must be an array");
      for (const json& f : j["factors"]) c.factors.push_back(spec_from_json(f));
    } else {
      c.factors = default_factors(c.mode, c.decomposition);
    }
  }
  if (c.factors.size() != expected_factors(c.mode))
    parse_error("operator '" + op + "' takes " + std::to_string(expected_factors(c.mode)) +
                " factor operators, got " + std::to_string(c.factors.size()));

  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object() || !g.contains("count") || !g["count"].is_number_integer() || g["count"].get<long>() < 2)
      parse_error("\"grid\" must be {\"count\": N} with N >= 2");
    c.grid_count = g["count"].get<std::size_t>();
  }
  if (j.contains("diagnostics")) {
    if (!j["diagnostics"].is_boolean()) parse_error("\"diagnostics\" must be a boolean");
    c.diagnostics = j["diagnostics"].get<bool>();
  }
  return c;
}

CurveFactory OperatorConfig::factory() const {
  const auto f = factors;
  switch (mode) {
    case OperatorMode::Base: return mvf::factory(f.front());
    case OperatorMode::Product: {
      const Decomposition d = decomposition;
      return [d, f](const ParamSamples& s) { return product_operator(d, f, s); };
    }
    case OperatorMode::Spectral:
      return [f](const ParamSamples& s) { return spectral_conjugation_operator(f[0], f[1], s); };
    case OperatorMode::Ldu:
      return [f](const ParamSamples& s) { return ldu_sign_preserving_operator(f[0], f[1], f[2], s); };
    case OperatorMode::CholeskyProductData:
      return [f](const ParamSamples& s) { return cholesky_product_data(f[0], s); };
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operator mode");
}

std::string OperatorConfig::name() const {
  if (mode == OperatorMode::Base) return factors.front().name();
  std::string n = mode_name(mode, decomposition) + "(";
  for (std::size_t i = 0; i < factors.size(); ++i) n += (i ? ", " : "") + factors[i].name();
  return n + ")";
}

std::string factorization_json(Decomposition kind, const ParamSamples& samples,
                               const std::vector<Factorization>& factorizations) {
  json out = json::array();
  for (std::size_t i = 0; i < factorizations.size(); ++i) {
    const Factorization& f = factorizations[i];
    json factors = json::array();
    for (const Factor& x : f.factors)
      factors.push_back({{"class", std::string(to_string(x.tag))}, {"matrix", matrix_json(x.matrix)}});
    json entry{{"index", i}, {"t", samples.t()[i]}, {"residual", f.residual}, {"factors", factors}};
    if (kind == Decomposition::Spectral) entry["degenerate_spectrum"] = f.degenerate_spectrum;
    if (kind == Decomposition::QR) entry["orthogonal_det"] = f.orthogonal_det;
    out.push_back(std::move(entry));
  }
  return json{{"decomposition", std::string(to_string(kind))}, {"samples", out}}.dump(2);
}

std::string order_report_json(const std::string& truth_id, const OperatorConfig& config,
                              const std::string& metric_name, const OrderReport& r) {
  json j{{"truth", truth_id},
         {"operator", config.name()},
         {"metric", metric_name},
         {"h", r.h},
         {"errors", r.errors},
         {"exact", r.exact}};
  if (r.exact) {
    j["slope"] = nullptr;
    j["constant"] = nullptr;
  } else {
    j["slope"] = r.slope;
    j["constant"] = r.constant;
    j["fit_levels"] = r.fit_levels;
  }
  return j.dump(2);
}

std::string ellipsoid_json(const EllipsoidDemo& demo) {
  auto frame = [](const EllipsoidFrame& f) {
    return json{{"t", f.t},
                {"eigenvalues", std::vector<double>(f.eigenvalues.data(), f.eigenvalues.data() + f.eigenvalues.size())},
                {"axes", matrix_json(f.axes)}};
  };
  json frames = json::array();
  for (std::size_t i = 0; i < demo.rotation.size(); ++i)
    frames.push_back({{"t", demo.rotation[i].t},
                      {"rotation", frame(demo.rotation[i])},
                      {"riemannian", frame(demo.riemannian[i])}});
  return json{{"start", matrix_json(demo.start)}, {"end", matrix_json(demo.end)}, {"frames", frames}}.dump(2);
}

std::string suite_json(const SuiteReport& report) {
  json checks = json::array();
  for (const SuiteCheck& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"suite", report.suite}, {"passed", report.all_passed()}, {"checks", checks}}.dump(2);
}

}  // namespace mvf::io
