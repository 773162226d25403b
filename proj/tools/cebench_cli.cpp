// cebench: command-line front end for the optical bench simulator.
//
// Exit codes: 0 success, 1 a verify check failed, 2 usage or configuration error.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cebench/commands.hpp"
#include "cebench/scenario.hpp"
#include "cebench/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ScenarioArgs {
  std::string config;
  std::vector<std::string> overrides;
};

void add_scenario_options(CLI::App& cmd, ScenarioArgs& args) {
  cmd.add_option("-c,--config", args.config, "Scenario file (INI key=value)")->check(CLI::ExistingFile);
  cmd.add_option("-s,--set", args.overrides, "Override a key, e.g. phases.theta1=0.5 (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
}

cebench::Scenario load(const ScenarioArgs& args) {
  if (args.config.empty()) return cebench::parse_scenario("", args.overrides);
  return cebench::load_scenario(args.config, args.overrides);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical path-polarization bench: correlations, sweeps, CHSH scans and self-checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cebench 0.1.0");

  ScenarioArgs correlate_args, sweep_args, report_args;

  auto* correlate = app.add_subcommand("correlate", "Correlation for one phase setting, both routes");
  add_scenario_options(*correlate, correlate_args);

  auto* sweep = app.add_subcommand("sweep", "Sweep one phase and write a CSV table");
  add_scenario_options(*sweep, sweep_args);

  int resolution = 64;
  auto* chsh = app.add_subcommand("chsh", "CHSH functionals at the violation sets and scan maxima");
  chsh->add_option("-r,--resolution", resolution, "Scan grid points per angle")->check(CLI::Range(8, 256));

  std::uint64_t seed = 0;
  bool mutate_bs = false;
  auto* verify = app.add_subcommand("verify", "Run every self-check; exit 1 if any fails");
  verify->add_option("--seed", seed, "Seed for randomized instances");
  verify->add_flag("--mutate-beam-splitter", mutate_bs,
                   "Run against a sign-flipped beam splitter to confirm the suite catches it");

  auto* report = app.add_subcommand("report", "Correlation, transfer chain and sixteen-term sum side by side");
  add_scenario_options(*report, report_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*correlate) {
      cebench::cmd_correlate(load(correlate_args), std::cout);
    } else if (*sweep) {
      cebench::cmd_sweep(load(sweep_args), std::cout);
    } else if (*chsh) {
      cebench::cmd_chsh(std::cout, resolution);
    } else if (*report) {
      cebench::cmd_report(load(report_args), std::cout);
    } else if (*verify) {
      cebench::VerifyOptions opts;
      opts.seed = seed;
      if (mutate_bs) {
        opts.optics.beam_splitter << 1.0, 1.0, -1.0, 1.0;
        opts.optics.beam_splitter /= std::sqrt(2.0);
      }
      const cebench::VerifyReport rep = cebench::run_verify(opts);
      cebench::print_verify(rep, std::cout);
      return rep.passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const cebench::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cebench::IoError& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}
