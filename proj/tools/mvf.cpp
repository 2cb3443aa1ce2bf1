// mvf command-line front end. Talks to the library through the C API only.
#include "mvf/mvf.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNumeric = 2;
constexpr int kSuiteFailed = 3;

struct Failure {
  int exit_code;
  std::string message;
};

using Context = std::unique_ptr<mvf_context, decltype(&mvf_context_destroy)>;
using Samples = std::unique_ptr<mvf_samples, decltype(&mvf_samples_destroy)>;
using CurvePtr = std::unique_ptr<mvf_curve, decltype(&mvf_curve_destroy)>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { mvf_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void check(mvf_context* ctx, mvf_status s) {
  if (s == MVF_OK) return;
  throw Failure{mvf_status_is_usage(s) ? kUsage : kNumeric,
                std::string(mvf_status_string(s)) + ": " + mvf_last_error(ctx)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write '" + path + "'"};
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Samples load_samples(mvf_context* ctx, const std::string& path, const std::string& csv_class) {
  const std::string text = read_file(path);
  mvf_samples* raw = nullptr;
  if (ends_with(path, ".csv"))
    check(ctx, mvf_samples_from_csv(ctx, text.c_str(), csv_class.c_str(), &raw));
  else
    check(ctx, mvf_samples_from_json(ctx, text.c_str(), &raw));
  return Samples(raw, mvf_samples_destroy);
}

std::string hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llX", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-valued function approximation with product operators"};
  app.require_subcommand(1);

  std::string input, output, config, kind, truth, suite, csv_class = "GeneralInvertible",
              diagnostics;
  int levels = 5;
  std::uint64_t seed = 0x5EED;

  auto* decompose = app.add_subcommand("decompose", "Factor every sample and write JSON");
  decompose->add_option("--input,-i", input, "Sample file (JSON)")->required();
  decompose->add_option("--kind,-k", kind, "qr | ldu | polar | spectral | cholesky")->required();
  decompose->add_option("--output,-o", output, "Output path (default stdout)");

  auto* approximate = app.add_subcommand("approximate", "Build an operator curve and write CSV");
  approximate->add_option("--input,-i", input, "Sample file (JSON, or CSV from a previous run)")->required();
  approximate->add_option("--config,-c", config, "Operator config (JSON)")->required();
  approximate->add_option("--output,-o", output, "Values CSV (default stdout)");
  approximate->add_option("--diagnostics,-d", diagnostics,
                          "Diagnostics CSV (det, minor signs, eigenvalues)");
  approximate->add_option("--class", csv_class, "Class tag for CSV input");

  auto* order = app.add_subcommand("order", "Measure the approximation order on a truth curve");
  order->add_option("--truth,-t", truth, "constant | spd_exp_curve | spd_bend_curve | rot_curve | "
                                         "polar_curve | sqrt_rot | lower_tri_curve")->required();
  order->add_option("--config,-c", config, "Operator config (JSON)")->required();
  order->add_option("--levels,-l", levels, "Mesh halvings (>= 4)")->check(CLI::Range(4, 12));
  order->add_option("--output,-o", output, "Output path (default stdout)");

  auto* ellipsoid = app.add_subcommand("ellipsoid-demo", "Rotation vs Riemannian transition frames");
  ellipsoid->add_option("--output,-o", output, "Output path (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("suite", suite, "metrics | operators | theorem1 | prop2 | alg1 | counterexample")
      ->required();
  check_cmd->add_option("--output,-o", output, "JSON report path");

  for (auto* sub : {decompose, approximate, order, ellipsoid, check_cmd})
    sub->add_option("--seed", seed, "RNG seed (default 0x5EED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Context ctx(mvf_context_create(), mvf_context_destroy);
  if (!ctx) {
    std::cerr << "mvf: out of memory\n";
    return kNumeric;
  }

  try {
    if (const char* env = std::getenv("MVF_TOL")) {
      char* end = nullptr;
      const double tol = std::strtod(env, &end);
      if (end == env || *end != '\0') throw Failure{kUsage, std::string("MVF_TOL: not a number: ") + env};
      check(ctx.get(), mvf_context_set_tolerance(ctx.get(), tol));
    }

    if (*decompose) {
      Samples s = load_samples(ctx.get(), input, csv_class);
      OwnedString json;
      check(ctx.get(), mvf_decompose(ctx.get(), s.get(), kind.c_str(), &json.p));
      write_output(output, json.str());
    } else if (*approximate) {
      Samples s = load_samples(ctx.get(), input, csv_class);
      const std::string cfg = read_file(config);
      mvf_curve* raw = nullptr;
      check(ctx.get(), mvf_curve_build(ctx.get(), s.get(), cfg.c_str(), &raw));
      CurvePtr curve(raw, mvf_curve_destroy);

      OwnedString warnings;
      check(ctx.get(), mvf_curve_warnings(ctx.get(), curve.get(), &warnings.p));
      for (const auto& w : nlohmann::json::parse(warnings.str())) std::cerr << "mvf: warning: " << w.get<std::string>() << '\n';

      const bool want_diag = !diagnostics.empty() || mvf_curve_wants_diagnostics(curve.get());
      OwnedString values, diag;
      check(ctx.get(), mvf_curve_sample_csv(ctx.get(), curve.get(), mvf_curve_grid_count(curve.get()),
                                            &values.p, want_diag ? &diag.p : nullptr));
      write_output(output, values.str());
      if (want_diag) {
        std::string path = diagnostics;
        if (path.empty()) path = output.empty() || output == "-" ? "-" : output + ".diagnostics.csv";
        write_output(path, diag.str());
      }
    } else if (*order) {
      const std::string cfg = read_file(config);
      OwnedString json;
      check(ctx.get(), mvf_order_report(ctx.get(), truth.c_str(), cfg.c_str(), levels, &json.p));
      write_output(output, json.str());
    } else if (*ellipsoid) {
      OwnedString json;
      check(ctx.get(), mvf_ellipsoid_demo(ctx.get(), &json.p));
      write_output(output, json.str());
    } else if (*check_cmd) {
      OwnedString json;
      int passed = 0;
      check(ctx.get(), mvf_check_suite(ctx.get(), suite.c_str(), seed, &json.p, &passed));
      const auto report = nlohmann::json::parse(json.str());
      std::cout << "suite " << suite << " (seed " << hex(seed) << ")\n";
      for (const auto& c : report["checks"]) {
        std::cout << (c["passed"].get<bool>() ? "  PASS  " : "  FAIL  ") << c["name"].get<std::string>();
        const std::string detail = c["detail"];
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << '\n';
      }
      std::cout << (passed ? "all checks passed\n" : "some checks FAILED\n");
      if (!output.empty()) write_output(output, json.str());
      return passed ? kOk : kSuiteFailed;
    }
  } catch (const Failure& f) {
    std::cerr << "mvf: error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "mvf: error: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}
