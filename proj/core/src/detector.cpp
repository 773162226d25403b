#include "cebench/detector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cebench {

using std::numbers::pi;

ComplexVector pm_ket(int s1, int s2) {
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) throw std::invalid_argument("pm_ket: signs must be +1 or -1");
  ComplexVector first(2), second(2);
  first << 1.0, static_cast<double>(s1);
  second << 1.0, static_cast<double>(s2);
  return kron(first, second) / 2.0;
}

namespace {

void require_post(const BenchState& s, const char* what) {
  if (s.stage != Stage::PostBSPrime)
    throw std::logic_error(std::string(what) + ": expected stage post-BS', got " + to_string(s.stage));
}

}  // namespace

AaProjection project_aa(const BenchState& post) {
  require_post(post, "project_aa");
  const BranchForm form = branch_form(post);

  AaProjection r;
  r.delta = post.phases.delta();
  r.branch = ComplexVector::Zero(kBenchDim);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) {
      const int i = basis_index(Path::a, Pol(s1), Path::a, Pol(s2));
      r.branch(i) = post.vector(i);
    }
  r.branch_weight = r.branch.squaredNorm() / post.norm2();

  const ComplexVector& aa = form.branches[0];
  const ComplexScalar vv = aa(0);
  if (std::abs(vv) == 0.0) throw std::domain_error("project_aa: aa branch has no VV component");
  r.pol = aa * (std::abs(vv) / vv) / aa.norm();
  r.pol_paired = std::numbers::sqrt2 * r.pol;

  const std::array<std::array<int, 2>, 4> signs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  for (std::size_t i = 0; i < signs.size(); ++i) r.pm_coefficients[i] = pm_ket(signs[i][0], signs[i][1]).dot(r.pol_paired);
  return r;
}

double p45_intensity(const BenchState& post) {
  require_post(post, "p45_intensity");
  return std::norm(project_aa(post).pm_coefficients[0]);
}

DetectionResult detect(const BenchState& post) {
  require_post(post, "detect");
  const BranchForm form = branch_form(post);
  DetectionResult r;
  const double total = post.norm2();
  for (std::size_t i = 0; i < 4; ++i) r.branch_probabilities[i] = form.branches[i].squaredNorm() / total;
  r.p45_joint_intensity = p45_intensity(post);
  r.delta = post.phases.delta();
  return r;
}

TimeSeries synthesize_fields(const SourceSpec& s1, const SourceSpec& s2, const PhaseSetting& ps, double window,
                             std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("synthesize_fields: need at least two samples");
  if (!(window > 0.0)) throw std::invalid_argument("synthesize_fields: window must be positive");
  validate(s1);
  validate(s2);

  const BenchState post = apply_bs_prime(evolve_prestate(s1, s2, ps));
  const ComplexScalar u = std::sqrt(project_aa(post).pm_coefficients[0]);

  TimeSeries ts;
  ts.times.resize(samples);
  ts.field1.resize(samples);
  ts.field2.resize(samples);
  const double h = window / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = h * static_cast<double>(i);
    ts.times[i] = t;
    ts.field1[i] = s1.amplitude * std::polar(1.0, s1.omega * t) * u;
    ts.field2[i] = s2.amplitude * std::polar(1.0, s2.omega * t) * u;
  }
  return ts;
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 64;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double trapezoid(std::span<const double> values, double spacing) {
  if (values.size() < 2) return 0.0;
  return spacing * (pairwise_sum(values) - 0.5 * (values.front() + values.back()));
}

AutocorrelationReport autocorrelation_demo(const SourceSpec& s1, const SourceSpec& s2, const PhaseSetting& ps,
                                           double window, std::size_t samples) {
  const double beat = std::abs(s1.omega - s2.omega);
  if (beat == 0.0)
    throw std::invalid_argument("autocorrelation_demo: the two sources must have different frequencies");
  if (!(window * beat >= kMinBeatProduct))
    throw std::invalid_argument("autocorrelation_demo: window must span window*|w1-w2| >= 100");
  if (samples < kMinAutocorrelationSamples)
    throw std::invalid_argument("autocorrelation_demo: at least 10^4 samples are required");

  const double fastest = std::max(std::abs(s1.omega), std::abs(s2.omega));
  const auto needed = static_cast<std::size_t>(std::ceil(kSamplesPerPeriod * window * fastest / (2.0 * pi))) + 1;
  const std::size_t n = std::max(samples, needed);

  const TimeSeries ts = synthesize_fields(s1, s2, ps, window, n);

  std::vector<double> total(n), self1(n), self2(n), cross(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double i1 = std::norm(ts.field1[i]);
    const double i2 = std::norm(ts.field2[i]);
    const double sum = std::norm(ts.field1[i] + ts.field2[i]);
    total[i] = sum * sum;
    self1[i] = i1 * i1;
    self2[i] = i2 * i2;
    cross[i] = 2.0 * i1 * i2;
  }

  const double h = ts.spacing();
  AutocorrelationReport r;
  r.window = window;
  r.samples = n;
  r.delta = ps.delta();
  r.total = trapezoid(total, h);
  r.self1 = trapezoid(self1, h);
  r.self2 = trapezoid(self2, h);
  r.cross = trapezoid(cross, h);
  r.beat_dc = r.cross;
  r.residual = r.total - r.self1 - r.self2 - r.cross - r.beat_dc;
  r.residual_fraction = r.total > 0.0 ? std::abs(r.residual) / r.total : 0.0;
  return r;
}

double beat_locked_window(double window, double omega1, double omega2) {
  const double beat = std::abs(omega1 - omega2);
  if (beat == 0.0) throw std::invalid_argument("beat_locked_window: frequencies must differ");
  const double period = 2.0 * pi / beat;
  const double cycles = std::max(0.0, std::round(window / period - 0.25));
  return period * (cycles + 0.25);
}

std::vector<AutocorrelationReport> autocorrelation_convergence(const SourceSpec& s1, const SourceSpec& s2,
                                                               const PhaseSetting& ps, double base_window,
                                                               std::size_t samples, int levels) {
  if (levels < 1) throw std::invalid_argument("autocorrelation_convergence: levels must be positive");
  std::vector<AutocorrelationReport> out;
  out.reserve(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) {
    const double w = beat_locked_window(base_window * std::ldexp(1.0, k), s1.omega, s2.omega);
    out.push_back(autocorrelation_demo(s1, s2, ps, w, samples << k));
  }
  return out;
}

}  // namespace cebench
