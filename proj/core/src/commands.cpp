#include "cebench/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cebench/contextuality.hpp"
#include "cebench/detector.hpp"

namespace cebench {

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

namespace {

std::string format_optional(const std::optional<double>& v) { return v ? format_real(*v) : std::string("nan"); }

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::out | std::ios::trunc);
  if (!f) throw IoError("cannot open output file '" + path + "' for writing");
  return f;
}

SweepRow evaluate_point(const Scenario& sc, const SweepSpec& sw, int i) {
  const SourceSpec s1 = sc.source1();
  const SourceSpec s2 = sc.source2();
  SweepRow row;
  row.var = sw.value(i);
  const PhaseSetting ps = phases_at(sc.phases, sw.variable, row.var);
  row.delta = ps.delta();
  row.c_closed = correlation_closed_form(ps, s1, s2);
  row.c_numeric = correlation_numeric(ps, s1, s2);
  row.g2 = g2_generalized(0, 0, 0, 0, ps, s1, s2);
  row.p45 = p45_intensity(apply_bs_prime(evolve_prestate(s1, s2, ps)));
  return row;
}

}  // namespace

CorrelationReport cmd_correlate(const Scenario& scenario, std::ostream& out) {
  const CorrelationReport r = sum_identity(scenario.phases, scenario.source1(), scenario.source2());
  fmt::print(out, "delta        {}\n", format_real(r.delta));
  fmt::print(out, "C_closed     {}\n", format_real(r.closed_form));
  fmt::print(out, "C_numeric    {}\n", format_real(r.numeric));
  fmt::print(out, "ratio        {}\n", format_optional(r.ratio));
  if (!scenario.output.empty()) {
    std::ofstream f = open_output(scenario.output);
    f << kCorrelateHeader << '\n'
      << format_real(r.delta) << ',' << format_real(r.closed_form) << ',' << format_real(r.numeric) << ','
      << format_optional(r.ratio) << '\n';
    if (!f) throw IoError("failed writing '" + scenario.output + "'");
  }
  return r;
}

std::vector<SweepRow> run_sweep(const Scenario& scenario) {
  if (!scenario.sweep) throw ConfigError("sweep requires a [sweep] section");
  const SweepSpec sw = *scenario.sweep;
  std::vector<SweepRow> rows(static_cast<std::size_t>(sw.points));

  const int workers = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 16u));
  const int chunk = (sw.points + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (int begin = 0; begin < sw.points; begin += chunk) {
    const int end = std::min(sw.points, begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (int i = begin; i < end; ++i) rows[static_cast<std::size_t>(i)] = evaluate_point(scenario, sw, i);
    }));
  }
  for (auto& j : jobs) j.get();
  return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows)
    out << format_real(r.var) << ',' << format_real(r.delta) << ',' << format_real(r.c_closed) << ','
        << format_real(r.c_numeric) << ',' << format_real(r.g2) << ',' << format_real(r.p45) << '\n';
}

std::vector<SweepRow> cmd_sweep(const Scenario& scenario, std::ostream& out) {
  std::vector<SweepRow> rows = run_sweep(scenario);
  if (scenario.output.empty()) {
    write_sweep_csv(rows, out);
    return rows;
  }
  std::ofstream f = open_output(scenario.output);
  write_sweep_csv(rows, f);
  f.flush();
  if (!f) throw IoError("failed writing '" + scenario.output + "'");
  fmt::print(out, "wrote {} rows ({}) to {}\n", rows.size(), to_string(scenario.sweep->variable), scenario.output);
  return rows;
}

std::vector<ChshRow> cmd_chsh(std::ostream& out, int resolution) {
  std::vector<ChshRow> rows;
  const ChshSetting c1 = case1_violation();
  const ChshSetting c2 = case2_violation();
  rows.push_back({"S  (case 1, published set)", evaluate(c1),
                  {c1.primary[0], c1.primed[0], c1.primary[1], c1.primed[1]}, false});
  rows.push_back({"S' (case 2, published set)", evaluate(c2),
                  {c2.primary[0], c2.primed[0], c2.primary[1], c2.primed[1]}, false});
  for (auto which : {ChshCase::One, ChshCase::Two}) {
    const ScanResult s = scan_max(which, resolution);
    rows.push_back({which == ChshCase::One ? "max |S|  (case 1, scan)" : "max |S'| (case 2, scan)", s.max_abs,
                    s.angles, false});
  }
  for (auto& r : rows) r.violates = std::abs(r.value) > kNoncontextualBound;

  fmt::print(out, "{:<28} {:>20}  {:<9} {}\n", "functional", "value", "violates", "angles (x, x', y, y')");
  for (const auto& r : rows)
    fmt::print(out, "{:<28} {:>20.12f}  {:<9} {:.6f} {:.6f} {:.6f} {:.6f}\n", r.label, r.value,
               r.violates ? "yes" : "no", r.angles[0], r.angles[1], r.angles[2], r.angles[3]);
  fmt::print(out, "noncontextual bound: |S| <= {}\n", kNoncontextualBound);
  return rows;
}

FullReport cmd_report(const Scenario& scenario, std::ostream& out) {
  FullReport rep;
  fmt::print(out, "== correlation ==\n");
  rep.correlation = cmd_correlate(scenario, out);

  const SourceSpec s1 = scenario.source1();
  const SourceSpec s2 = scenario.source2();
  const BenchState pre = evolve_prestate(s1, s2, scenario.phases);
  const BenchState post = apply_bs_prime(pre);
  rep.transfer = transfer_check(pre, post, scenario.phases);
  const TransferReport& t = rep.transfer;

  fmt::print(out, "\n== transfer chain ==\n");
  fmt::print(out, "(Psi0|I1(t1,p1) I2(t2,p2)|Psi0)      {}\n", format_real(t.symmetrized_phased_ops));
  fmt::print(out, "(Psif|[aa . P45 ⊗ aa . P45]|Psif)    {}\n", format_real(t.final_fixed_ops));
  fmt::print(out, "(Psi|I1(0,0) I2(0,0)|Psi)            {}\n", format_real(t.prestate_fixed_ops));
  fmt::print(out, "max pairwise difference              {}\n",
             format_real(std::max({std::abs(t.diff_symmetrized_final), std::abs(t.diff_symmetrized_prestate),
                                   std::abs(t.diff_final_prestate)})));
  fmt::print(out, "BS' conjugation error (S1, S2)       {} {}\n", format_real(t.conjugation_error_s1),
             format_real(t.conjugation_error_s2));

  const CorrelationReport& c = rep.correlation;
  fmt::print(out, "\n== sixteen-term decomposition ==\n");
  fmt::print(out, "{:>2} {:>2} {:>2} {:>2} {:>5} {:>24} {:>24}\n", "k", "l", "m", "n", "sign", "closed", "numeric");
  for (const auto& term : c.terms)
    fmt::print(out, "{:>2} {:>2} {:>2} {:>2} {:>5} {:>24} {:>24}\n", term.k, term.l, term.m, term.n, term.sign,
               format_real(term.closed), format_real(term.numeric));
  fmt::print(out, "signed sum (closed terms)            {}\n", format_real(c.signed_term_sum_closed));
  fmt::print(out, "signed sum (numeric terms)           {}\n", format_real(c.signed_term_sum_numeric));
  fmt::print(out, "signed sum of g2                     {}\n", format_real(c.signed_g2_sum));
  fmt::print(out, "g2 sum / C_closed                    {}\n", format_optional(c.g2_sum_ratio));
  return rep;
}

}  // namespace cebench
