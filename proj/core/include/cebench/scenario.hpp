#pragma once

// Run configuration read from an INI-style key=value file.
//
//   seed = 0
//   output = sweep.csv
//
//   [amplitudes]
//   intensity1 = 1.0      ; |A1|^2
//   intensity2 = 1.0      ; |A2|^2
//
//   [phases]              ; radians
//   theta1 = 0.0
//   theta2 = 0.0
//   phi1 = 0.0
//   phi2 = 0.0
//
//   [sweep]
//   variable = delta      ; theta1 | theta2 | phi1 | phi2 | delta
//   start = 0.0
//   stop = 6.283185307179586
//   points = 9
//
// Every key is optional. Overrides use the dotted form "phases.theta1=0.5".

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cebench/pipeline.hpp"

namespace cebench {

/// Bad configuration text, unknown key, or out-of-range value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepVariable { Theta1, Theta2, Phi1, Phi2, Delta };

const char* to_string(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

struct SweepSpec {
  SweepVariable variable = SweepVariable::Delta;
  double start = 0.0;
  double stop = 0.0;
  int points = 2;

  /// Grid value i of points, endpoints included.
  double value(int i) const;
};

struct Scenario {
  double intensity1 = 1.0;
  double intensity2 = 1.0;
  PhaseSetting phases;
  std::optional<SweepSpec> sweep;
  std::uint64_t seed = 0;
  std::string output;

  SourceSpec source1() const { return source_with_intensity(intensity1, kDefaultOmega1); }
  SourceSpec source2() const { return source_with_intensity(intensity2, kDefaultOmega2); }
};

/// Phases for sweep value `value`: the swept phase replaced, or for Delta,
/// theta1 adjusted so that theta1 + phi1 - theta2 - phi2 == value.
PhaseSetting phases_at(const PhaseSetting& base, SweepVariable variable, double value);

/// Throws ConfigError naming the offending key or bound.
Scenario parse_scenario(std::string_view text, std::span<const std::string> overrides = {});

/// Reads and parses a file; ConfigError if it cannot be read.
Scenario load_scenario(const std::filesystem::path& path, std::span<const std::string> overrides = {});

}  // namespace cebench
