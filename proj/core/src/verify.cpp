#include "cebench/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cebench/contextuality.hpp"
#include "cebench/correlations.hpp"
#include "cebench/detector.hpp"
#include "cebench/fit.hpp"
#include "cebench/observables.hpp"

namespace cebench {

using std::numbers::pi;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::DiscrepancyLogged: return "discrepancy-logged";
  }
  return "unknown";
}

bool VerifyReport::passed() const { return count(CheckStatus::Fail) == 0; }

int VerifyReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [s](const CheckRow& r) { return r.status == s; }));
}

int exit_status(const VerifyReport& report) { return report.passed() ? 0 : 1; }

namespace {

constexpr double kExact = 1e-12;
constexpr double kFormTolerance = 1e-10;
constexpr int kGrid = 64;

double grid_point(int i, int n = kGrid) { return 2.0 * pi * static_cast<double>(i) / static_cast<double>(n); }

class Suite {
 public:
  explicit Suite(const VerifyOptions& o) : opts_(o), rng_(o.seed) {}

  std::vector<CheckRow> take() { return std::move(rows_); }

  double angle() { return std::uniform_real_distribution<double>(-pi, pi)(rng_); }

  SourceSpec source(double omega) {
    SourceSpec s;
    const double mod = std::uniform_real_distribution<double>(0.5, 2.0)(rng_);
    s.amplitude = std::polar(mod, angle());
    s.omega = omega;
    return s;
  }

  PhaseSetting phases() { return {angle(), angle(), angle(), angle()}; }

  const VerifyOptions& opts() const { return opts_; }

  void within(std::string name, int criterion, double measured, double expected, double tol, std::string note = {}) {
    const bool ok = std::abs(measured - expected) <= tol;
    rows_.push_back({std::move(name), criterion, ok ? CheckStatus::Pass : CheckStatus::Fail, measured, expected, tol,
                     std::move(note)});
  }

  /// Functional form must hold; a differing constant is logged, not failed.
  void logged(std::string name, int criterion, bool form_holds, double measured, double published, double tol,
              std::string note) {
    CheckStatus st = CheckStatus::Fail;
    if (form_holds) st = std::abs(measured - published) <= tol ? CheckStatus::Pass : CheckStatus::DiscrepancyLogged;
    rows_.push_back({std::move(name), criterion, st, measured, published, tol, std::move(note)});
  }

  void guarded(const std::string& name, int criterion, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rows_.push_back({name, criterion, CheckStatus::Fail, std::nan(""), std::nan(""), 0.0,
                       std::string("threw: ") + e.what()});
    }
  }

 private:
  VerifyOptions opts_;
  std::mt19937_64 rng_;
  std::vector<CheckRow> rows_;
};

SourceSpec unit_source(double omega) { return source_with_intensity(1.0, omega); }

void correlation_form(Suite& s) {
  s.guarded("ghz_form_grid", 1, [&] {
    const SourceSpec a = unit_source(kDefaultOmega1), b = unit_source(kDefaultOmega2);
    double worst = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      PhaseSetting ps{grid_point(i), s.angle(), s.angle(), s.angle()};
      const double expect = std::cos(ps.theta1 - ps.theta2 + ps.phi1 - ps.phi2);
      worst = std::max(worst, std::abs(correlation_closed_form(ps, a, b) - expect));
    }
    s.within("ghz_form_grid", 1, worst, 0.0, kExact, "max |C - cos(θ1-θ2+φ1-φ2)| over 64 points");
  });
  s.guarded("ghz_extremes", 1, [&] {
    const SourceSpec a = unit_source(kDefaultOmega1), b = unit_source(kDefaultOmega2);
    s.within("ghz_max_at_zero", 1, correlation_closed_form({}, a, b), 1.0, 0.0, "C at Δ = 0");
    s.within("ghz_min_at_pi", 1, correlation_closed_form({pi, 0.0, 0.0, 0.0}, a, b), -1.0, 0.0, "C at Δ = π");
  });
  s.guarded("closed_form_unequal", 0, [&] {
    const SourceSpec a = source_with_intensity(1.0, kDefaultOmega1), b = source_with_intensity(3.0, kDefaultOmega2);
    s.within("closed_form_unequal", 0, correlation_closed_form({}, a, b), 0.75, kExact, "intensities 1 and 3, Δ = 0");
  });
}

void hbt(Suite& s) {
  s.guarded("hbt_reduction", 2, [&] {
    const SourceSpec a = unit_source(kDefaultOmega1), b = unit_source(kDefaultOmega2);
    const double t1 = s.angle(), t2 = s.angle(), p2 = s.angle();
    double worst = 0.0, shift_worst = 0.0, lo = 1e300, hi = -1e300;
    for (int i = 0; i < kGrid; ++i) {
      const PhaseSetting ps{t1, t2, p2 + grid_point(i), p2};
      const double g = g2_generalized(0, 0, 0, 0, ps, a, b);
      worst = std::max(worst, std::abs(g - (1.0 - 0.5 * std::cos(ps.phi1 - ps.phi2 + t1 - t2))));
      const double common = s.angle();
      const PhaseSetting shifted{t1, t2, ps.phi1 + common, ps.phi2 + common};
      shift_worst = std::max(shift_worst, std::abs(g2_generalized(0, 0, 0, 0, shifted, a, b) - g));
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
    s.within("hbt_reduction", 2, worst, 0.0, kExact, "max |g2 - (1 - ½cos(φ1-φ2+θ1-θ2))| over 64 points");
    s.within("hbt_depends_on_difference", 2, shift_worst, 0.0, kExact, "g2 change under a common φ shift");
    s.within("hbt_range", 2, std::max({0.0, 0.5 - lo, hi - 1.5}), 0.0, kExact, "excursion outside [½, 3/2]");
  });
  s.guarded("hbt_extremes", 2, [&] {
    const SourceSpec a = unit_source(kDefaultOmega1), b = unit_source(kDefaultOmega2);
    s.within("hbt_extreme_low", 2, g2_generalized(0, 0, 0, 0, {}, a, b), 0.5, kExact, "g2 at Δ = 0");
    s.within("hbt_extreme_high", 2, g2_generalized(0, 0, 0, 0, {0.0, 0.0, pi, 0.0}, a, b), 1.5, kExact,
             "g2 at Δ = π");
    double worst = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      const double alpha = grid_point(i), beta = s.angle();
      worst = std::max(worst, std::abs(g2_hbt(alpha, beta, a, b) - (1.0 - 0.5 * std::cos(alpha - beta))));
    }
    s.within("hbt_two_source", 2, worst, 0.0, kExact, "two-source g2 vs 1 - ½cos(α-β)");
  });
}

void chsh(Suite& s) {
  const double target = 2.0 * std::numbers::sqrt2;
  s.guarded("chsh_case1", 3, [&] {
    s.within("chsh_case1", 3, evaluate(case1_violation()), target, kExact, "S(0, π/2, π/4, -π/4)");
  });
  s.guarded("chsh_case2_anchors", 3, [&] {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) worst = std::max(worst, std::abs(evaluate(case2_violation(s.angle())) - target));
    s.within("chsh_case2_anchors", 3, worst, 0.0, kExact, "max |S' - 2√2| over 10 random anchors α = β");
  });
  for (auto which : {ChshCase::One, ChshCase::Two}) {
    const std::string name = which == ChshCase::One ? "chsh_scan_case1" : "chsh_scan_case2";
    s.guarded(name, 3, [&] {
      const ScanResult r = scan_max(which, s.opts().scan_resolution);
      s.within(name, 3, r.max_abs, target, 1e-4,
               fmt::format("grid {}^4 then refine; grid best {:.12f}", s.opts().scan_resolution, r.grid_max_abs));
    });
  }
  s.guarded("chsh_all_zero", 0, [&] { s.within("chsh_all_zero", 0, s_value(0, 0, 0, 0), 2.0, kExact, "S(0,0,0,0)"); });
  s.guarded("chsh_unequal_anchors_rejected", 0, [&] {
    bool threw = false;
    try {
      s_prime_value(0, 0, 0, 0, 0.1, 0.0);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    s.within("chsh_unequal_anchors_rejected", 0, threw ? 1.0 : 0.0, 1.0, 0.0, "α ≠ β must be rejected");
  });
}

void detection(Suite& s) {
  const BenchOptics& optics = s.opts().optics;
  s.guarded("p45_law", 4, [&] {
    const SourceSpec a = s.source(kDefaultOmega1), b = s.source(kDefaultOmega2);
    double worst = 0.0, complement = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      const double d = grid_point(i);
      const PhaseSetting ps{d + s.angle(), 0.0, 0.0, 0.0};
      PhaseSetting shifted = ps;
      shifted.phi2 = ps.theta1 - d;
      const double p = p45_intensity(apply_bs_prime(evolve_prestate(a, b, shifted, optics), optics));
      worst = std::max(worst, std::abs(p - 0.5 * (1.0 - std::cos(d))));
      const PhaseSetting opposite{shifted.theta1 + pi, 0.0, 0.0, shifted.phi2};
      const double q = p45_intensity(apply_bs_prime(evolve_prestate(a, b, opposite, optics), optics));
      complement = std::max(complement, std::abs(p + q - 1.0));
    }
    s.within("p45_law", 4, worst, 0.0, kExact, "max |p45 - ½(1 - cos Δ)| over 64 points");
    s.within("p45_complement", 0, complement, 0.0, kExact, "max |p45(Δ) + p45(Δ+π) - 1|");
  });
}

void goldens(Suite& s) {
  const BenchOptics& optics = s.opts().optics;
  s.guarded("state_goldens", 5, [&] {
    const int aVaV = basis_index(Path::a, Pol::V, Path::a, Pol::V);
    const int bHbH = basis_index(Path::b, Pol::H, Path::b, Pol::H);
    double pre_err = 0.0, post_err = 0.0, aa_err = 0.0, weight_err = 0.0;
    for (int n = 0; n < s.opts().instances; ++n) {
      const SourceSpec a = s.source(kDefaultOmega1), b = s.source(kDefaultOmega2);
      const PhaseSetting ps = s.phases();
      const ComplexScalar c = a.amplitude * b.amplitude / std::numbers::sqrt2;
      const ComplexScalar e = std::polar(1.0, ps.delta());

      ComplexVector pre_expect = ComplexVector::Zero(kBenchDim);
      pre_expect(aVaV) = c;
      pre_expect(bHbH) = -c * e;
      const BenchState pre = evolve_prestate(a, b, ps, optics);
      pre_err = std::max(pre_err, max_abs_diff(pre.vector, pre_expect));

      // BS' sends a -> (a+b)/√2 and b -> (a-b)/√2 on both paths: VV keeps
      // +c/2 on all four path pairs, HH picks up -1 where exactly one path is b.
      ComplexVector post_expect = ComplexVector::Zero(kBenchDim);
      for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2) {
          const double parity = (p1 + p2) % 2 == 0 ? 1.0 : -1.0;
          post_expect(basis_index(Path(p1), Pol::V, Path(p2), Pol::V)) = c / 2.0;
          post_expect(basis_index(Path(p1), Pol::H, Path(p2), Pol::H)) = -parity * c * e / 2.0;
        }
      const BenchState post = apply_bs_prime(pre, optics);
      post_err = std::max(post_err, max_abs_diff(post.vector, post_expect));

      const AaProjection aa = project_aa(post);
      ComplexVector pol_expect = ComplexVector::Zero(4);
      pol_expect(0) = 1.0;
      pol_expect(3) = -e;
      ComplexVector branch_expect = ComplexVector::Zero(kBenchDim);
      branch_expect(aVaV) = c / 2.0;
      branch_expect(basis_index(Path::a, Pol::H, Path::a, Pol::H)) = -c * e / 2.0;
      aa_err = std::max({aa_err, max_abs_diff(aa.pol_paired, pol_expect), max_abs_diff(aa.branch, branch_expect)});
      weight_err = std::max(weight_err, std::abs(aa.branch_weight - 0.25));
    }
    const std::string over = fmt::format("over {} random settings", s.opts().instances);
    s.within("prestate_golden", 5, pre_err, 0.0, kExact, "entrywise vs (A1A2/√2)[aVaV - e^{iΔ}bHbH] " + over);
    s.within("poststate_golden", 5, post_err, 0.0, kExact, "entrywise vs the post-BS' expansion " + over);
    s.within("aa_branch_golden", 5, aa_err, 0.0, kExact, "aa branch (A1A2/2√2)[VV - e^{iΔ}HH] " + over);
    s.within("aa_branch_weight", 0, weight_err, 0.0, kExact, "max |aa weight - ¼| " + over);
  });
}

ComplexMatrix random_sigma(Suite& s, Source src, std::uniform_int_distribution<int>& pick, std::mt19937_64& g) {
  const Dof dof = pick(g) % 2 == 0 ? Dof::Path : Dof::Pol;
  const Branch br = static_cast<Branch>(pick(g) % 3);
  return sigma({src, dof, s.angle(), br});
}

void properties(Suite& s) {
  const BenchOptics& optics = s.opts().optics;
  const int n = s.opts().instances;
  const std::string over = fmt::format("{} random instances", n);
  const ComplexMatrix id16 = identity(kBenchDim);

  s.guarded("unitarity", 6, [&] {
    const auto defect = [](const ComplexMatrix& u) {
      return max_abs_diff(u.adjoint() * u, identity(static_cast<int>(u.rows())));
    };
    double worst = std::max({defect(optics.beam_splitter), defect(optics.pol_swap), defect(beam_splitter_pair(optics))});
    for (int i = 0; i < n; ++i) {
      const double x = s.angle();
      const PhaseSign sign = i % 2 == 0 ? PhaseSign::Plus : PhaseSign::Minus;
      worst = std::max({worst, defect(pol_phase(x, sign)), defect(path_phase(x, sign)),
                        defect(b_branch(pol_phase(x, sign))), defect(phase_elements(s.phases())),
                        defect(embed(pol_phase(x, sign), static_cast<Slot>(i % 4)))});
    }
    s.within("unitarity", 6, worst, 0.0, kExact, "max |U†U - I| over elements, " + over);
  });

  s.guarded("projectors", 6, [&] {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const Source src = i % 2 == 0 ? Source::S1 : Source::S2;
      const Dof dof = (i / 2) % 2 == 0 ? Dof::Path : Dof::Pol;
      const double x = s.angle();
      const ComplexMatrix p = sigma({src, dof, x, Branch::Plus});
      const ComplexMatrix m = sigma({src, dof, x, Branch::Minus});
      const ComplexMatrix full = sigma({src, dof, x, Branch::Full});
      const ComplexMatrix op = intensity_operator(src, s.angle(), s.angle()).matrix;
      worst = std::max({worst, max_abs_diff(p * p, p), max_abs_diff(m * m, m), (p * m).cwiseAbs().maxCoeff(),
                        max_abs_diff(p + m, id16), max_abs_diff(p - m, full), max_abs_diff(p, p.adjoint()),
                        max_abs_diff(op * op, op), max_abs_diff(op, op.adjoint())});
    }
    const ComplexMatrix pol = polarizer_45();
    worst = std::max(worst, max_abs_diff(pol * pol, pol));
    s.within("projectors", 6, worst, 0.0, kExact, "P² = P, P+P- = 0, P+ + P- = I, hermiticity; " + over);
  });

  s.guarded("commutation", 6, [&] {
    std::mt19937_64 g(s.opts().seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, 5);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const ComplexMatrix x = random_sigma(s, Source::S1, pick, g);
      const ComplexMatrix y = random_sigma(s, Source::S2, pick, g);
      worst = std::max(worst, (x * y - y * x).cwiseAbs().maxCoeff());
      const ComplexMatrix u = intensity_operator(Source::S1, s.angle(), s.angle()).matrix;
      const ComplexMatrix v = intensity_operator(Source::S2, s.angle(), s.angle()).matrix;
      worst = std::max(worst, (u * v - v * u).cwiseAbs().maxCoeff());
    }
    s.within("commutation", 6, worst, 0.0, kExact, "max |[A1, B2]| for source-1 vs source-2 operators; " + over);
  });

  s.guarded("norm_preservation", 6, [&] {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const SourceSpec a = s.source(kDefaultOmega1), b = s.source(kDefaultOmega2);
      const double expect = a.intensity() * b.intensity();
      const auto stages = trace_prestate(a, b, s.phases(), optics);
      for (std::size_t k = 2; k < stages.size(); ++k)
        worst = std::max(worst, std::abs(stages[k].norm2() - expect) / expect);
      worst = std::max(worst, std::abs(apply_bs_prime(stages.back(), optics).norm2() - expect) / expect);
    }
    s.within("norm_preservation", 6, worst, 0.0, kExact,
             "relative |norm² - |A1A2|²| at every stage after symmetrization; " + over);
  });
}

void oracles(Suite& s) {
  const SourceSpec a = unit_source(kDefaultOmega1), b = unit_source(kDefaultOmega2);
  const double base_theta2 = s.angle(), base_phi1 = s.angle(), base_phi2 = s.angle();
  const auto at = [&](double d) { return PhaseSetting{d - base_phi1 + base_theta2 + base_phi2, base_theta2, base_phi1, base_phi2}; };

  s.guarded("numeric_kappa_fit", 7, [&] {
    std::vector<double> ds, cs;
    for (int i = 0; i < kGrid; ++i) {
      ds.push_back(grid_point(i));
      cs.push_back(correlation_numeric(at(ds.back()), a, b));
    }
    const CosineFit f = fit_cosine(ds, cs, false);
    s.logged("numeric_kappa_fit", 7, f.max_residual < kFormTolerance, f.amplitude, 1.0, kFormTolerance,
             fmt::format("operator route C = κ cos Δ, fit residual {:.3g}; published constant 1", f.max_residual));
  });

  s.guarded("sum_identity_ratio", 7, [&] {
    double lo = 1e300, hi = -1e300, bracket = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      const CorrelationReport r = sum_identity(at(grid_point(i) + 0.01), a, b);
      bracket = std::max(bracket, std::abs(r.signed_term_sum_numeric - r.numeric));
      if (!r.g2_sum_ratio) continue;
      lo = std::min(lo, *r.g2_sum_ratio);
      hi = std::max(hi, *r.g2_sum_ratio);
    }
    s.logged("sum_identity_ratio", 7, hi - lo < kFormTolerance, 0.5 * (lo + hi), 1.0, kFormTolerance,
             fmt::format("signed sixteen-term g2 sum / cos Δ, spread {:.3g}; published constant 1", hi - lo));
    s.within("numeric_bracket_sum", 7, bracket, 0.0, kExact, "signed numeric bracket sum vs operator-route C");
  });

  s.guarded("intensity_term_scale", 7, [&] {
    double lo = 1e300, hi = -1e300;
    const PhaseSetting ps = at(0.7);
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n) {
            const IntensityTerm t = intensity_term(k, l, m, n, ps, a, b);
            if (std::abs(t.closed) < kCosineGuard) continue;
            lo = std::min(lo, t.numeric / t.closed);
            hi = std::max(hi, t.numeric / t.closed);
          }
    s.logged("intensity_term_scale", 7, hi - lo < kFormTolerance, 0.5 * (lo + hi), 1.0, kFormTolerance,
             "operator-route intensity term / closed-form term");
  });

  s.guarded("transfer_chain", 7, [&] {
    double worst = 0.0, conj = 0.0;
    TransferReport sample;
    for (int i = 0; i < s.opts().instances; ++i) {
      const SourceSpec x = s.source(kDefaultOmega1), y = s.source(kDefaultOmega2);
      const PhaseSetting ps = s.phases();
      const BenchState pre = evolve_prestate(x, y, ps);
      const TransferReport t = transfer_check(pre, apply_bs_prime(pre), ps);
      const double scale = x.intensity() * y.intensity();
      worst = std::max({worst, std::abs(t.diff_symmetrized_final) / scale,
                        std::abs(t.diff_symmetrized_prestate) / scale, std::abs(t.diff_final_prestate) / scale});
      conj = std::max({conj, t.conjugation_error_s1, t.conjugation_error_s2});
      if (i == 0) sample = t;
    }
    s.within("transfer_chain", 7, worst, 0.0, kExact,
             fmt::format("brackets (first instance) {:.17g} {:.17g} {:.17g}", sample.symmetrized_phased_ops,
                         sample.final_fixed_ops, sample.prestate_fixed_ops));
    s.within("transfer_conjugation", 7, conj, 0.0, kExact, "BS'† plus-projector BS' = |a)(a| for both sources");
  });
}

void autocorrelation(Suite& s) {
  const SourceSpec a = unit_source(kDefaultOmega1), b = unit_source(kDefaultOmega2);
  const double beat = std::abs(a.omega - b.omega);
  const double window = 1000.0 / beat;
  const std::size_t samples = kMinAutocorrelationSamples;

  s.guarded("autocorr_residual", 8, [&] {
    const PhaseSetting ps{1.0, 0.0, 0.0, 0.0};
    const AutocorrelationReport r = autocorrelation_demo(a, b, ps, beat_locked_window(window, a.omega, b.omega), samples);
    s.within("autocorr_residual", 8, r.residual_fraction, 0.0, 1e-2,
             fmt::format("|residual| / total at window·|Δω| = {:.1f}", r.window * beat));
  });

  s.guarded("autocorr_halving", 8, [&] {
    const auto levels = autocorrelation_convergence(a, b, {1.0, 0.0, 0.0, 0.0}, window, samples, 3);
    double worst = 0.0;
    std::string ratios;
    for (std::size_t k = 1; k < levels.size(); ++k) {
      const double ratio = levels[k - 1].residual_fraction / levels[k].residual_fraction;
      worst = std::max(worst, std::abs(ratio - 2.0));
      ratios += fmt::format("{}{:.6f}", k == 1 ? "" : " ", ratio);
    }
    s.within("autocorr_halving", 8, worst, 0.0, 0.1, "residual ratios between doubled windows: " + ratios);
  });

  s.guarded("autocorr_cos_fit", 8, [&] {
    std::vector<double> ds, cross;
    const double w = beat_locked_window(window, a.omega, b.omega);
    for (int i = 0; i < 16; ++i) {
      const double d = grid_point(i, 16) + 0.05;
      ds.push_back(d);
      cross.push_back(autocorrelation_demo(a, b, {d, 0.0, 0.0, 0.0}, w, samples).cross / w);
    }
    const CosineFit f = fit_cosine(ds, cross, true);
    s.within("autocorr_cos_fit", 8, f.max_residual / std::abs(f.amplitude), 0.0, 1e-3,
             fmt::format("cross term ≈ {:.6f} + {:.6f} cos Δ", f.offset, f.amplitude));
  });
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.instances < 1) throw std::invalid_argument("run_verify: instances must be positive");
  Suite suite(options);
  correlation_form(suite);
  hbt(suite);
  chsh(suite);
  detection(suite);
  goldens(suite);
  properties(suite);
  oracles(suite);
  autocorrelation(suite);

  VerifyReport report;
  report.seed = options.seed;
  report.rows = suite.take();
  return report;
}

void print_verify(const VerifyReport& report, std::ostream& out) {
  fmt::print(out, "verify seed={}\n", report.seed);
  fmt::print(out, "{:<19} {:<4} {:<30} {:>24} {:>24} {:>9}  {}\n", "status", "crit", "check", "measured", "expected",
             "tol", "note");
  for (const auto& r : report.rows)
    fmt::print(out, "{:<19} {:<4} {:<30} {:>24.17g} {:>24.17g} {:>9.2g}  {}\n", to_string(r.status),
               r.criterion == 0 ? std::string("-") : std::to_string(r.criterion), r.name, r.measured, r.expected,
               r.tolerance, r.note);
  fmt::print(out, "summary: {} pass, {} fail, {} discrepancy-logged\n", report.count(CheckStatus::Pass),
             report.count(CheckStatus::Fail), report.count(CheckStatus::DiscrepancyLogged));
}

}  // namespace cebench
