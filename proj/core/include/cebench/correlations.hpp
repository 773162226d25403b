#pragma once

// Intensity-intensity correlations, computed two ways.
//
// The numeric route evaluates explicit operators on the symmetrized state.
// The closed-form route evaluates the published formulas. Both are always
// returned; where the two disagree by a constant factor the ratio is
// reported rather than hidden.

#include <array>
#include <optional>

#include "cebench/pipeline.hpp"

namespace cebench {

/// |cos Δ| below this makes a ratio meaningless; it is reported as empty.
inline constexpr double kCosineGuard = 1e-3;

/// (|A1|^2 + |A2|^2)^2
double intensity_norm(const SourceSpec& s1, const SourceSpec& s2);

/// (Psi0| sigma-product |Psi0) / (|A1|^2 + |A2|^2)^2 on the symmetrized state.
double correlation_numeric(const PhaseSetting& ps, const SourceSpec& s1, const SourceSpec& s2);

/// 4|A1|^2|A2|^2 cos Δ / (|A1|^2 + |A2|^2)^2; cos Δ for equal intensities.
double correlation_closed_form(const PhaseSetting& ps, const SourceSpec& s1, const SourceSpec& s2);

struct IntensityTerm {
  int k = 0, l = 0, m = 0, n = 0;
  /// (-1)^{k+l+m+n}
  int sign = 1;
  /// 2|A1|^2|A2|^2/(Σ)^2 · [1 - cos(Δ + (k-m)π + (l-n)π)]
  double closed = 0.0;
  /// (Psi0| I1(θ1+kπ, φ1+lπ) I2(θ2+mπ, φ2+nπ) |Psi0) / (Σ)^2
  double numeric = 0.0;
};

/// Indices must be 0 or 1 (std::invalid_argument otherwise).
IntensityTerm intensity_term(int k, int l, int m, int n, const PhaseSetting& ps, const SourceSpec& s1,
                             const SourceSpec& s2);

/// Two-source HBT correlation for path differences alpha, beta. The closed
/// forms accept one dark source; std::invalid_argument if both are dark.
double g2_hbt(double alpha, double beta, const SourceSpec& s1, const SourceSpec& s2);

/// Single-source terms plus the closed-form intensity term.
double g2_generalized(int k, int l, int m, int n, const PhaseSetting& ps, const SourceSpec& s1,
                      const SourceSpec& s2);

struct CorrelationReport {
  double delta = 0.0;
  double numeric = 0.0;
  double closed_form = 0.0;
  /// numeric / closed_form, empty near cosine zeros
  std::optional<double> ratio;
  /// indexed by 8k + 4l + 2m + n
  std::array<IntensityTerm, 16> terms{};
  double signed_term_sum_numeric = 0.0;
  double signed_term_sum_closed = 0.0;
  /// Σ (-1)^{k+l+m+n} g2_generalized(k, l, m, n)
  double signed_g2_sum = 0.0;
  /// signed_g2_sum / closed_form, empty near cosine zeros
  std::optional<double> g2_sum_ratio;
};

/// Both routes, all sixteen terms and the signed sums. Does not assert that
/// any of them agree.
CorrelationReport sum_identity(const PhaseSetting& ps, const SourceSpec& s1, const SourceSpec& s2);

/// num / den unless |cos_delta| < kCosineGuard.
std::optional<double> guarded_ratio(double num, double den, double cos_delta);

}  // namespace cebench
