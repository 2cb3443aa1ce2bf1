#include "mvf/product_operators.hpp"

#include "mvf/errors.hpp"

#include <algorithm>
#include <string>

namespace mvf {
namespace {

CurveTraits combine(const std::vector<Curve>& parts) {
  CurveTraits t{true, true, 0};
  int order = -1;
  for (const auto& c : parts) {
    t.interpolatory = t.interpolatory && c.traits().interpolatory;
    t.consistent = t.consistent && c.traits().consistent;
    order = order < 0 ? c.traits().claimed_order : std::min(order, c.traits().claimed_order);
  }
  t.claimed_order = std::max(order, 0);
  return t;
}

std::vector<Factorization> decompose_all(Decomposition d, const ParamSamples& samples) {
  std::vector<Factorization> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    try {
      out.push_back(decompose(d, samples[i], samples.tolerance()));
    } catch (const Error& e) {
      throw e.at_sample(static_cast<int>(i));
    }
  }
  return out;
}

ParamSamples factor_samples(const ParamSamples& samples, const std::vector<Factorization>& fs,
                            std::size_t j) {
  const ClassTag tag = fs.front().factors[j].tag;
  std::vector<Matrix> ms;
  ms.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].factors[j].tag != tag)
      throw Error(ErrorCode::ClassMismatch,
                  "factor " + std::to_string(j) + " changes class at sample " + std::to_string(i),
                  static_cast<int>(j), static_cast<int>(i));
    ms.push_back(fs[i].factors[j].matrix);
  }
  return ParamSamples(samples.t(), std::move(ms), tag, samples.tolerance());
}

ClassTag product_class(Decomposition d) {
  return d == Decomposition::Polar ? ClassTag::GeneralInvertible : ClassTag::GeneralInvertible;
}

}  // namespace

Curve product_operator(Decomposition decomposition, const std::vector<OperatorSpec>& factor_ops,
                       const ParamSamples& samples) {
  if (decomposition == Decomposition::Spectral) {
    if (factor_ops.size() != 2)
      throw Error(ErrorCode::InvalidArgument,
                  "spectral product operator takes (rotation op, eigenvalue op)");
    return spectral_conjugation_operator(factor_ops[0], factor_ops[1], samples);
  }
  if (decomposition == Decomposition::Cholesky)
    throw Error(ErrorCode::InvalidArgument,
                "cholesky factors are not independent; use cholesky_product_data");

  const std::size_t m = decomposition == Decomposition::LDU ? 3 : 2;
  if (factor_ops.size() != m)
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(decomposition)) + " product operator needs " +
                    std::to_string(m) + " factor operators");

  const auto fs = decompose_all(decomposition, samples);
  std::vector<Curve> parts;
  for (std::size_t j = 0; j < m; ++j) parts.push_back(build_curve(factor_ops[j], factor_samples(samples, fs, j)));

  const CurveTraits traits = combine(parts);
  return Curve(samples.t_min(), samples.t_max(), product_class(decomposition), samples.order(),
               [parts](double t) {
                 Matrix p = parts.front()(t);
                 for (std::size_t j = 1; j < parts.size(); ++j) p = p * parts[j](t);
                 return p;
               },
               traits);
}

Curve spectral_conjugation_operator(const OperatorSpec& rotation_op,
                                    const OperatorSpec& eigenvalue_op,
                                    const ParamSamples& samples) {
  if (samples.tag() != ClassTag::SPD)
    throw Error(ErrorCode::NotSPD, "spectral_conjugation_operator: samples must be SPD");
  const auto fs = decompose_all(Decomposition::Spectral, samples);
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].degenerate_spectrum)
      warnings.push_back("DegenerateSpectrum at sample " + std::to_string(i) +
                         ": orthogonal factor not unique");

  std::vector<Curve> parts{build_curve(rotation_op, factor_samples(samples, fs, 2)),
                           build_curve(eigenvalue_op, factor_samples(samples, fs, 1))};
  const CurveTraits traits = combine(parts);
  return Curve(samples.t_min(), samples.t_max(), ClassTag::SPD, samples.order(),
               [q = parts[0], d = parts[1]](double t) {
                 const Matrix qt = q(t);
                 return symmetrize(qt.transpose() * d(t) * qt);
               },
               traits, std::move(warnings));
}

std::vector<int> minor_sign_vector(const Matrix& a) {
  std::vector<int> signs;
  for (double p : principal_minors(a)) signs.push_back(p > 0.0 ? 1 : (p < 0.0 ? -1 : 0));
  return signs;
}

Curve ldu_sign_preserving_operator(const OperatorSpec& lower_op, const OperatorSpec& diagonal_op,
                                   const OperatorSpec& upper_op, const ParamSamples& samples) {
  const auto reference = minor_sign_vector(samples[0]);
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (minor_sign_vector(samples[i]) != reference)
      throw Error(ErrorCode::SignVectorMismatch,
                  "SignVectorMismatch between samples 0 and " + std::to_string(i) +
                      ": principal-minor sign vectors differ, so by Bolzano's theorem no "
                      "continuous interpolant keeps every principal minor nonzero",
                  static_cast<int>(i), static_cast<int>(i));

  Curve product = product_operator(Decomposition::LDU, {lower_op, diagonal_op, upper_op}, samples);
  return product;
}

Curve ldu_sign_preserving_operator(const ParamSamples& samples) {
  return ldu_sign_preserving_operator(
      OperatorSpec::log_exp_linear(),
      OperatorSpec::diagonal_elementwise(OperatorSpec::positive_scalar()),
      OperatorSpec::log_exp_linear(), samples);
}

Curve cholesky_product_data(const OperatorSpec& spd_op, const ParamSamples& samples) {
  if (samples.tag() != ClassTag::LowerTriangularPosDiag)
    throw Error(ErrorCode::ClassMismatch,
                "cholesky_product_data: samples must be lower triangular with positive diagonal");
  std::vector<Matrix> squares;
  squares.reserve(samples.size());
  const Tolerance& tol = samples.tolerance();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Matrix a = symmetrize(samples[i] * samples[i].transpose());
    if (!check_class(a, ClassTag::SPD, tol))
      throw Error(ErrorCode::NotSPD, "NotSPD: L L^T not SPD (singular L)", static_cast<int>(i))
          .at_sample(static_cast<int>(i));
    squares.push_back(std::move(a));
  }
  const Curve spd_curve = build_curve(spd_op, ParamSamples(samples.t(), std::move(squares),
                                                           ClassTag::SPD, tol));
  return Curve(samples.t_min(), samples.t_max(), ClassTag::LowerTriangularPosDiag, samples.order(),
               [spd_curve, tol](double t) { return cholesky_factor(spd_curve(t), tol); },
               spd_curve.traits());
}

}  // namespace mvf
