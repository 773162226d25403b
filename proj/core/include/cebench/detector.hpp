#pragma once

// Single-detector readout: the aa path branch after BS', the 45-degree
// polarizer, and a time-domain check of the intensity autocorrelation.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cebench/pipeline.hpp"
#include "cebench/tensor.hpp"

namespace cebench {

/// |±)|±) on the two polarization factors, over (VV, VH, HV, HH).
/// s1, s2 are +1 or -1.
ComplexVector pm_ket(int s1, int s2);

struct AaProjection {
  /// The |a)|a) component of the post-BS' state, on the bench space.
  ComplexVector branch;
  /// Its polarization part over (VV, VH, HV, HH), unit norm, VV coefficient real positive.
  ComplexVector pol;
  /// sqrt2 * pol: each source contributes unit intensity, VV coefficient is 1.
  /// This is the form expanded as ½(1 ∓ e^{iΔ}) over the |±±) basis.
  ComplexVector pol_paired;
  /// (++|, (+-|, (-+|, (--| applied to pol_paired.
  std::array<ComplexScalar, 4> pm_coefficients{};
  /// |branch|^2 / |state|^2
  double branch_weight = 0.0;
  double delta = 0.0;
};

/// Throws std::logic_error unless the state is at stage post-BS'.
AaProjection project_aa(const BenchState& post);

/// |(++|pol_paired)|^2 = ½(1 - cos Δ). Throws std::logic_error on a wrong stage.
double p45_intensity(const BenchState& post);

struct DetectionResult {
  /// aa, ab, ba, bb fractions of the total intensity
  std::array<double, 4> branch_probabilities{};
  double p45_joint_intensity = 0.0;
  double delta = 0.0;
};

DetectionResult detect(const BenchState& post);

/// Uniformly sampled fields from both sources behind the polarizer.
struct TimeSeries {
  std::vector<double> times;
  std::vector<ComplexScalar> field1;
  std::vector<ComplexScalar> field2;

  double spacing() const { return times.size() < 2 ? 0.0 : times[1] - times[0]; }
};

/// E_i(t) = A_i e^{i w_i t} u with u = sqrt(½(1 - e^{iΔ})), so that
/// |u|^4 is the polarizer law. Throws std::invalid_argument if samples < 2.
TimeSeries synthesize_fields(const SourceSpec& s1, const SourceSpec& s2, const PhaseSetting& ps, double window,
                             std::size_t samples);

/// Sum in fixed pairwise order; result does not depend on scheduling.
double pairwise_sum(std::span<const double> values);

/// Trapezoidal integral of uniformly spaced samples.
double trapezoid(std::span<const double> values, double spacing);

struct AutocorrelationReport {
  double window = 0.0;
  std::size_t samples = 0;
  double delta = 0.0;
  /// ∫ |E1 + E2|^4 dt
  double total = 0.0;
  /// ∫ I1^2 dt, ∫ I2^2 dt
  double self1 = 0.0;
  double self2 = 0.0;
  /// 2 ∫ I1 I2 dt
  double cross = 0.0;
  /// Non-oscillating part of the squared first-order term 4 Re(E1 E2*)^2,
  /// which is another 2 ∫ I1 I2 dt for constant envelopes.
  double beat_dc = 0.0;
  /// total - self1 - self2 - cross - beat_dc: the oscillating interference terms
  double residual = 0.0;
  double residual_fraction = 0.0;
};

inline constexpr std::size_t kMinAutocorrelationSamples = 10000;
inline constexpr double kMinBeatProduct = 100.0;
inline constexpr double kSamplesPerPeriod = 20.0;

/// Requires w1 != w2, window·|w1 - w2| >= 100 and samples >= 10^4
/// (std::invalid_argument otherwise). The sample count is raised if needed
/// to keep 20 samples per period of the faster field.
AutocorrelationReport autocorrelation_demo(const SourceSpec& s1, const SourceSpec& s2, const PhaseSetting& ps,
                                           double window, std::size_t samples);

/// The window nearest `window` that spans a whole number of beat periods
/// plus a quarter. At such windows the oscillating integrals take the same
/// value, so the residual fraction falls off exactly as 1/window.
double beat_locked_window(double window, double omega1, double omega2);

/// Reports at beat-locked windows near base_window · 2^k for k = 0 .. levels-1.
std::vector<AutocorrelationReport> autocorrelation_convergence(const SourceSpec& s1, const SourceSpec& s2,
                                                               const PhaseSetting& ps, double base_window,
                                                               std::size_t samples, int levels);

}  // namespace cebench
