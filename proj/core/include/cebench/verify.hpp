#pragma once

// Self-check suite run by `cebench verify`. Every acceptance check and a set
// of module invariants become one row each. Rows whose functional form holds
// but whose constant differs from the published one are kept apart as
// discrepancy-logged: they are printed with both values and do not fail the run.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cebench/pipeline.hpp"

namespace cebench {

enum class CheckStatus { Pass, Fail, DiscrepancyLogged };

const char* to_string(CheckStatus s);

struct CheckRow {
  std::string name;
  /// Acceptance criterion number, 0 for a module invariant.
  int criterion = 0;
  CheckStatus status = CheckStatus::Pass;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckRow> rows;

  bool passed() const;
  int count(CheckStatus s) const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Elements the pipeline is built from; replace one to run a mutation check.
  BenchOptics optics;
  int instances = 100;
  int scan_resolution = 64;
};

/// Deterministic for a given seed and options. A check that throws becomes
/// a failed row carrying the exception message.
VerifyReport run_verify(const VerifyOptions& options = {});

void print_verify(const VerifyReport& report, std::ostream& out);

/// 0 when no row failed, 1 otherwise.
int exit_status(const VerifyReport& report);

}  // namespace cebench
