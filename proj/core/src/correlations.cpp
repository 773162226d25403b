#include "cebench/correlations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cebench/fit.hpp"
#include "cebench/observables.hpp"

namespace cebench {

namespace {

void check_index(int v) {
  if (v != 0 && v != 1) throw std::invalid_argument("correlation term indices must be 0 or 1");
}

double shifted_cos(int k, int l, int m, int n, const PhaseSetting& ps) {
  using std::numbers::pi;
  return std::cos(ps.delta() + (k - m) * pi + (l - n) * pi);
}

// Closed forms stay defined when one source is dark; only a fully dark
// bench or non-finite input is rejected.
void validate_closed(const SourceSpec& s1, const SourceSpec& s2) {
  for (const SourceSpec* s : {&s1, &s2})
    if (!std::isfinite(s->amplitude.real()) || !std::isfinite(s->amplitude.imag()) || !std::isfinite(s->omega))
      throw std::invalid_argument("source parameters must be finite");
  if (!(s1.intensity() + s2.intensity() > 0.0)) throw std::invalid_argument("at least one source must be lit");
}

double cross_weight(const SourceSpec& s1, const SourceSpec& s2) {
  return s1.intensity() * s2.intensity() / intensity_norm(s1, s2);
}

}  // namespace

double intensity_norm(const SourceSpec& s1, const SourceSpec& s2) {
  const double total = s1.intensity() + s2.intensity();
  return total * total;
}

double correlation_numeric(const PhaseSetting& ps, const SourceSpec& s1, const SourceSpec& s2) {
  const ComplexVector psi0 = symmetrized_state(s1, s2).vector;
  return expectation(psi0, correlation_operator(ps)).real() / intensity_norm(s1, s2);
}

double correlation_closed_form(const PhaseSetting& ps, const SourceSpec& s1, const SourceSpec& s2) {
  validate_closed(s1, s2);
  return 4.0 * cross_weight(s1, s2) * std::cos(ps.delta());
}

IntensityTerm intensity_term(int k, int l, int m, int n, const PhaseSetting& ps, const SourceSpec& s1,
                             const SourceSpec& s2) {
  for (int v : {k, l, m, n}) check_index(v);
  using std::numbers::pi;

  IntensityTerm t;
  t.k = k;
  t.l = l;
  t.m = m;
  t.n = n;
  t.sign = ((k + l + m + n) % 2 == 0) ? 1 : -1;
  t.closed = 2.0 * cross_weight(s1, s2) * (1.0 - shifted_cos(k, l, m, n, ps));

  const ComplexVector psi0 = symmetrized_state(s1, s2).vector;
  const ComplexMatrix op = intensity_operator(Source::S1, ps.theta1 + k * pi, ps.phi1 + l * pi).matrix *
                           intensity_operator(Source::S2, ps.theta2 + m * pi, ps.phi2 + n * pi).matrix;
  t.numeric = expectation(psi0, op).real() / intensity_norm(s1, s2);
  return t;
}

double g2_hbt(double alpha, double beta, const SourceSpec& s1, const SourceSpec& s2) {
  validate_closed(s1, s2);
  const double norm = intensity_norm(s1, s2);
  const double i1 = s1.intensity();
  const double i2 = s2.intensity();
  return (i1 * i1 + i2 * i2) / norm + 2.0 * i1 * i2 / norm * (1.0 - std::cos(alpha - beta));
}

double g2_generalized(int k, int l, int m, int n, const PhaseSetting& ps, const SourceSpec& s1,
                      const SourceSpec& s2) {
  for (int v : {k, l, m, n}) check_index(v);
  validate_closed(s1, s2);
  const double norm = intensity_norm(s1, s2);
  const double i1 = s1.intensity();
  const double i2 = s2.intensity();
  const double term = 2.0 * cross_weight(s1, s2) * (1.0 - shifted_cos(k, l, m, n, ps));
  return (i1 * i1 + i2 * i2) / norm + term;
}

std::optional<double> guarded_ratio(double num, double den, double cos_delta) {
  if (std::abs(cos_delta) < kCosineGuard || den == 0.0) return std::nullopt;
  return num / den;
}

CorrelationReport sum_identity(const PhaseSetting& ps, const SourceSpec& s1, const SourceSpec& s2) {
  CorrelationReport r;
  r.delta = ps.delta();
  r.numeric = correlation_numeric(ps, s1, s2);
  r.closed_form = correlation_closed_form(ps, s1, s2);
  const double c = std::cos(r.delta);
  r.ratio = guarded_ratio(r.numeric, r.closed_form, c);

  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) {
          const IntensityTerm t = intensity_term(k, l, m, n, ps, s1, s2);
          r.terms[8 * k + 4 * l + 2 * m + n] = t;
          r.signed_term_sum_numeric += t.sign * t.numeric;
          r.signed_term_sum_closed += t.sign * t.closed;
          r.signed_g2_sum += t.sign * g2_generalized(k, l, m, n, ps, s1, s2);
        }
  r.g2_sum_ratio = guarded_ratio(r.signed_g2_sum, r.closed_form, c);
  return r;
}

CosineFit fit_cosine(std::span<const double> deltas, std::span<const double> values, bool with_offset) {
  if (deltas.size() != values.size()) throw std::invalid_argument("fit_cosine: sample count mismatch");
  if (deltas.size() < 2) throw std::invalid_argument("fit_cosine: need at least two samples");

  const auto n = static_cast<Eigen::Index>(deltas.size());
  const int cols = with_offset ? 2 : 1;
  Eigen::MatrixXd design(n, cols);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = std::cos(deltas[i]);
    if (with_offset) design(i, 1) = 1.0;
    rhs(i) = values[i];
  }
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(rhs);

  CosineFit fit;
  fit.amplitude = coef(0);
  fit.offset = with_offset ? coef(1) : 0.0;
  fit.max_residual = (design * coef - rhs).cwiseAbs().maxCoeff();
  return fit;
}

}  // namespace cebench
