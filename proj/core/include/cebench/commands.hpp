#pragma once

// The command implementations behind the cebench tool. Each prints its
// table to `out` and returns the values it printed.

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cebench/correlations.hpp"
#include "cebench/observables.hpp"
#include "cebench/scenario.hpp"

namespace cebench {

/// An output file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kSweepHeader = "var,delta,C_closed,C_numeric,g2,p45";
inline constexpr std::string_view kCorrelateHeader = "delta,C_closed,C_numeric,ratio";

/// Full-precision (17 significant digit) rendering used in every CSV.
std::string format_real(double v);

/// Prints numeric, closed form, ratio and Δ. Writes a one-row CSV to
/// scenario.output when it is set.
CorrelationReport cmd_correlate(const Scenario& scenario, std::ostream& out);

struct SweepRow {
  double var = 0.0;
  double delta = 0.0;
  double c_closed = 0.0;
  double c_numeric = 0.0;
  double g2 = 0.0;
  double p45 = 0.0;
};

/// Evaluates the sweep grid (concurrently) and returns rows in grid order.
/// Throws ConfigError when the scenario has no sweep.
std::vector<SweepRow> run_sweep(const Scenario& scenario);

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

/// run_sweep + write_sweep_csv to scenario.output (stdout when empty).
/// Throws IoError for an unwritable path.
std::vector<SweepRow> cmd_sweep(const Scenario& scenario, std::ostream& out);

struct ChshRow {
  std::string label;
  double value = 0.0;
  std::array<double, 4> angles{};
  bool violates = false;
};

/// The two published violation sets followed by scan maxima for both cases.
std::vector<ChshRow> cmd_chsh(std::ostream& out, int resolution = 64);

struct FullReport {
  CorrelationReport correlation;
  TransferReport transfer;
};

/// cmd_correlate + transfer_check + the sixteen-term sum side by side.
FullReport cmd_report(const Scenario& scenario, std::ostream& out);

}  // namespace cebench
