#include "mvf/mvf.h"

#include "mvf/analysis.hpp"
#include "mvf/ellipsoid.hpp"
#include "mvf/errors.hpp"
#include "mvf/io.hpp"
#include "mvf/suites.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

struct mvf_context {
  mvf::Tolerance tol;
  std::string last_error;
  int last_sample = -1;
};

struct mvf_samples {
  mvf::ParamSamples samples;
};

struct mvf_curve {
  mvf::Curve curve;
  mvf::io::OperatorConfig config;
};

namespace {

mvf_status map_code(mvf::ErrorCode code) {
  using mvf::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return MVF_E_INVALID_ARGUMENT;
    case ErrorCode::Parse: return MVF_E_PARSE;
    case ErrorCode::ClassViolation: return MVF_E_CLASS_VIOLATION;
    case ErrorCode::ClassMismatch: return MVF_E_CLASS_MISMATCH;
    case ErrorCode::NotSPD: return MVF_E_NOT_SPD;
    case ErrorCode::NotSymmetric: return MVF_E_NOT_SYMMETRIC;
    case ErrorCode::NotSkew: return MVF_E_NOT_SKEW;
    case ErrorCode::LogBranchFailure: return MVF_E_LOG_BRANCH;
    case ErrorCode::SingularInput: return MVF_E_SINGULAR;
    case ErrorCode::ZeroPrincipalMinor: return MVF_E_ZERO_PRINCIPAL_MINOR;
    case ErrorCode::NonPositiveDeterminant: return MVF_E_NONPOSITIVE_DETERMINANT;
    case ErrorCode::DegreeMismatch: return MVF_E_DEGREE_MISMATCH;
    case ErrorCode::NonPositiveSample: return MVF_E_NONPOSITIVE_SAMPLE;
    case ErrorCode::SignPatternViolation: return MVF_E_SIGN_PATTERN;
    case ErrorCode::ZeroDiagonal: return MVF_E_ZERO_DIAGONAL;
    case ErrorCode::SignVectorMismatch: return MVF_E_SIGN_VECTOR_MISMATCH;
    case ErrorCode::OutOfDomain: return MVF_E_OUT_OF_DOMAIN;
    case ErrorCode::SelfCheckFailed: return MVF_E_SELF_CHECK;
  }
  return MVF_E_INTERNAL;
}

// Runs f, converting exceptions into a status and the context's message.
template <class F>
mvf_status guard(mvf_context* ctx, F&& f) {
  if (!ctx) return MVF_E_INVALID_ARGUMENT;
  ctx->last_error.clear();
  ctx->last_sample = -1;
  try {
    f();
    return MVF_OK;
  } catch (const mvf::Error& e) {
    ctx->last_error = e.what();
    ctx->last_sample = e.sample().value_or(-1);
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
  } catch (...) {
    ctx->last_error = "unknown failure";
  }
  return MVF_E_INTERNAL;
}

void require(bool cond, const char* what) {
  if (!cond) throw mvf::Error(mvf::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void copy_out(const mvf::Matrix& m, double* out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
}

}  // namespace

extern "C" {

const char* mvf_status_string(mvf_status status) {
  switch (status) {
    case MVF_OK: return "ok";
    case MVF_E_INVALID_ARGUMENT: return "InvalidArgument";
    case MVF_E_PARSE: return "Parse";
    case MVF_E_CLASS_VIOLATION: return "ClassViolation";
    case MVF_E_CLASS_MISMATCH: return "ClassMismatch";
    case MVF_E_NOT_SPD: return "NotSPD";
    case MVF_E_NOT_SYMMETRIC: return "NotSymmetric";
    case MVF_E_NOT_SKEW: return "NotSkew";
    case MVF_E_LOG_BRANCH: return "LogBranchFailure";
    case MVF_E_SINGULAR: return "SingularInput";
    case MVF_E_ZERO_PRINCIPAL_MINOR: return "ZeroPrincipalMinor";
    case MVF_E_NONPOSITIVE_DETERMINANT: return "NonPositiveDeterminant";
    case MVF_E_DEGREE_MISMATCH: return "DegreeMismatch";
    case MVF_E_NONPOSITIVE_SAMPLE: return "NonPositiveSample";
    case MVF_E_SIGN_PATTERN: return "SignPatternViolation";
    case MVF_E_ZERO_DIAGONAL: return "ZeroDiagonal";
    case MVF_E_SIGN_VECTOR_MISMATCH: return "SignVectorMismatch";
    case MVF_E_OUT_OF_DOMAIN: return "OutOfDomain";
    case MVF_E_SELF_CHECK: return "SelfCheckFailed";
    case MVF_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

int mvf_status_is_usage(mvf_status status) {
  return status == MVF_E_PARSE || status == MVF_E_INVALID_ARGUMENT ? 1 : 0;
}

mvf_context* mvf_context_create(void) { return new (std::nothrow) mvf_context(); }

void mvf_context_destroy(mvf_context* ctx) { delete ctx; }

mvf_status mvf_context_set_tolerance(mvf_context* ctx, double tau_class) {
  return guard(ctx, [&] {
    require(tau_class > 0.0 && tau_class < 1.0, "tolerance must lie in (0, 1)");
    ctx->tol.tau_class = tau_class;
  });
}

double mvf_context_tolerance(const mvf_context* ctx) { return ctx ? ctx->tol.tau_class : 0.0; }

const char* mvf_last_error(const mvf_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

int mvf_last_error_sample(const mvf_context* ctx) { return ctx ? ctx->last_sample : -1; }

mvf_status mvf_samples_create(mvf_context* ctx, size_t count, size_t n, const double* t,
                              const double* data, const char* class_tag, mvf_samples** out) {
  return guard(ctx, [&] {
    require(out && t && data && class_tag && count > 0 && n > 0, "mvf_samples_create: bad arguments");
    std::vector<mvf::Matrix> ms;
    for (size_t k = 0; k < count; ++k) {
      mvf::Matrix m(n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = data[k * n * n + i * n + j];
      ms.push_back(std::move(m));
    }
    *out = new mvf_samples{mvf::ParamSamples(std::vector<double>(t, t + count), std::move(ms),
                                             mvf::class_tag_from_string(class_tag), ctx->tol)};
  });
}

mvf_status mvf_samples_from_json(mvf_context* ctx, const char* json, mvf_samples** out) {
  return guard(ctx, [&] {
    require(json && out, "mvf_samples_from_json: null argument");
    *out = new mvf_samples{mvf::io::parse_sample_file(json, ctx->tol)};
  });
}

mvf_status mvf_samples_from_csv(mvf_context* ctx, const char* csv, const char* class_tag,
                                mvf_samples** out) {
  return guard(ctx, [&] {
    require(csv && class_tag && out, "mvf_samples_from_csv: null argument");
    *out = new mvf_samples{mvf::io::parse_curve_csv(csv, mvf::class_tag_from_string(class_tag), ctx->tol)};
  });
}

mvf_status mvf_samples_to_json(mvf_context* ctx, const mvf_samples* samples, char** json) {
  return guard(ctx, [&] {
    require(samples && json, "mvf_samples_to_json: null argument");
    *json = dup(mvf::io::write_sample_file(samples->samples));
  });
}

void mvf_samples_destroy(mvf_samples* samples) { delete samples; }

size_t mvf_samples_count(const mvf_samples* samples) { return samples ? samples->samples.size() : 0; }

size_t mvf_samples_order(const mvf_samples* samples) {
  return samples ? static_cast<size_t>(samples->samples.order()) : 0;
}

mvf_status mvf_samples_matrix(mvf_context* ctx, const mvf_samples* samples, size_t index, double* out) {
  return guard(ctx, [&] {
    require(samples && out, "mvf_samples_matrix: null argument");
    require(index < samples->samples.size(), "mvf_samples_matrix: index out of range");
    copy_out(samples->samples[index], out);
  });
}

mvf_status mvf_decompose(mvf_context* ctx, const mvf_samples* samples, const char* kind, char** json) {
  return guard(ctx, [&] {
    require(samples && kind && json, "mvf_decompose: null argument");
    const mvf::Decomposition d = mvf::decomposition_from_string(kind);
    const mvf::ParamSamples& s = samples->samples;
    std::vector<mvf::Factorization> fs;
    for (std::size_t i = 0; i < s.size(); ++i) {
      try {
        fs.push_back(mvf::decompose(d, s[i], ctx->tol));
      } catch (const mvf::Error& e) {
        throw e.at_sample(static_cast<int>(i));
      }
    }
    *json = dup(mvf::io::factorization_json(d, s, fs));
  });
}

mvf_status mvf_curve_build(mvf_context* ctx, const mvf_samples* samples, const char* config_json,
                           mvf_curve** out) {
  return guard(ctx, [&] {
    require(samples && config_json && out, "mvf_curve_build: null argument");
    mvf::io::OperatorConfig config = mvf::io::parse_operator_config(config_json);
    mvf::Curve curve = config.factory()(samples->samples);
    *out = new mvf_curve{std::move(curve), std::move(config)};
  });
}

void mvf_curve_destroy(mvf_curve* curve) { delete curve; }

size_t mvf_curve_order(const mvf_curve* curve) {
  return curve ? static_cast<size_t>(curve->curve.order()) : 0;
}

void mvf_curve_domain(const mvf_curve* curve, double* t_min, double* t_max) {
  if (!curve) return;
  if (t_min) *t_min = curve->curve.t_min();
  if (t_max) *t_max = curve->curve.t_max();
}

size_t mvf_curve_grid_count(const mvf_curve* curve) { return curve ? curve->config.grid_count : 0; }

int mvf_curve_wants_diagnostics(const mvf_curve* curve) {
  return curve && curve->config.diagnostics ? 1 : 0;
}

mvf_status mvf_curve_eval(mvf_context* ctx, const mvf_curve* curve, double t, double* out) {
  return guard(ctx, [&] {
    require(curve && out, "mvf_curve_eval: null argument");
    copy_out(curve->curve(t), out);
  });
}

mvf_status mvf_curve_warnings(mvf_context* ctx, const mvf_curve* curve, char** json) {
  return guard(ctx, [&] {
    require(curve && json, "mvf_curve_warnings: null argument");
    *json = dup(nlohmann::json(curve->curve.warnings()).dump());
  });
}

mvf_status mvf_curve_sample_csv(mvf_context* ctx, const mvf_curve* curve, size_t count,
                                char** values_csv, char** diagnostics_csv) {
  return guard(ctx, [&] {
    require(curve && values_csv, "mvf_curve_sample_csv: null argument");
    require(count >= 2, "mvf_curve_sample_csv: need at least 2 points");
    const auto t = mvf::uniform_grid(curve->curve.t_min(), curve->curve.t_max(), count);
    const auto values = curve->curve.evaluate(t);
    std::string v = mvf::io::write_curve_csv(t, values);
    std::optional<std::string> d;
    if (diagnostics_csv) d = mvf::io::write_diagnostics_csv(t, values);
    *values_csv = dup(v);
    if (diagnostics_csv) *diagnostics_csv = dup(*d);
  });
}

mvf_status mvf_order_report(mvf_context* ctx, const char* truth_id, const char* config_json,
                            int levels, char** json) {
  return guard(ctx, [&] {
    require(truth_id && config_json && json, "mvf_order_report: null argument");
    const mvf::TruthFunction truth = mvf::truth_function(truth_id);
    const mvf::io::OperatorConfig config = mvf::io::parse_operator_config(config_json);
    const mvf::MetricDescriptor metric = mvf::class_metric(truth.tag);
    const mvf::OrderReport r = mvf::approximation_order(truth, config.factory(), metric, levels);
    *json = dup(mvf::io::order_report_json(truth.id, config, metric.name(), r));
  });
}

mvf_status mvf_ellipsoid_demo(mvf_context* ctx, char** json) {
  return guard(ctx, [&] {
    require(json != nullptr, "mvf_ellipsoid_demo: null argument");
    *json = dup(mvf::io::ellipsoid_json(mvf::ellipsoid_demo()));
  });
}

mvf_status mvf_check_suite(mvf_context* ctx, const char* name, uint64_t seed, char** json,
                           int* all_passed) {
  return guard(ctx, [&] {
    require(name && json && all_passed, "mvf_check_suite: null argument");
    const mvf::SuiteReport r = mvf::run_suite(name, seed);
    *json = dup(mvf::io::suite_json(r));
    *all_passed = r.all_passed() ? 1 : 0;
  });
}

void mvf_string_free(char* s) { std::free(s); }

}  // extern "C"
