#include "cebench/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace cebench {

namespace pt = boost::property_tree;

const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::Theta1: return "theta1";
    case SweepVariable::Theta2: return "theta2";
    case SweepVariable::Phi1: return "phi1";
    case SweepVariable::Phi2: return "phi2";
    case SweepVariable::Delta: return "delta";
  }
  return "unknown";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  for (auto v : {SweepVariable::Theta1, SweepVariable::Theta2, SweepVariable::Phi1, SweepVariable::Phi2,
                 SweepVariable::Delta})
    if (name == to_string(v)) return v;
  return std::nullopt;
}

double SweepSpec::value(int i) const {
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

PhaseSetting phases_at(const PhaseSetting& base, SweepVariable variable, double value) {
  PhaseSetting ps = base;
  switch (variable) {
    case SweepVariable::Theta1: ps.theta1 = value; break;
    case SweepVariable::Theta2: ps.theta2 = value; break;
    case SweepVariable::Phi1: ps.phi1 = value; break;
    case SweepVariable::Phi2: ps.phi2 = value; break;
    case SweepVariable::Delta: ps.theta1 = value - base.phi1 + base.theta2 + base.phi2; break;
  }
  return ps;
}

namespace {

const std::set<std::string> kTopLevel{"seed", "output"};
const std::set<std::string> kAmplitudeKeys{"intensity1", "intensity2"};
const std::set<std::string> kPhaseKeys{"theta1", "theta2", "phi1", "phi2"};
const std::set<std::string> kSweepKeys{"variable", "start", "stop", "points"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double to_real(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("key '" + key + "': expected a real number, got '" + text + "'");
  if (!std::isfinite(v)) throw ConfigError("key '" + key + "': value must be finite");
  return v;
}

long long to_integer(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("key '" + key + "': expected an integer, got '" + text + "'");
  return v;
}

void check_section(const std::string& section, const pt::ptree& node, const std::set<std::string>& allowed) {
  for (const auto& [key, child] : node) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + section + "." + key + "'");
    if (!child.empty()) throw ConfigError("key '" + section + "." + key + "' must be a plain value");
  }
}

void apply_override(pt::ptree& tree, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override '" + assignment + "' must have the form key=value");
  const std::string key = trim(std::string_view(assignment).substr(0, eq));
  const std::string value = trim(std::string_view(assignment).substr(eq + 1));
  if (key.empty()) throw ConfigError("override '" + assignment + "' has an empty key");
  if (key.find('.') == std::string::npos && !kTopLevel.contains(key))
    throw ConfigError("unknown key '" + key + "'");
  tree.put(pt::ptree::path_type(key, '.'), value);
}

}  // namespace

Scenario parse_scenario(std::string_view text, std::span<const std::string> overrides) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  for (const auto& o : overrides) apply_override(tree, o);

  Scenario sc;
  for (const auto& [key, node] : tree) {
    if (kTopLevel.contains(key)) {
      if (!node.empty()) throw ConfigError("key '" + key + "' is a value, not a section");
      if (key == "seed") {
        const long long seed = to_integer(key, node.data());
        if (seed < 0) throw ConfigError("key 'seed': must be >= 0");
        sc.seed = static_cast<std::uint64_t>(seed);
      } else {
        sc.output = trim(node.data());
      }
    } else if (key == "amplitudes") {
      check_section(key, node, kAmplitudeKeys);
      for (const auto& [k, v] : node) {
        const double x = to_real(key + "." + k, v.data());
        if (!(x > 0.0)) throw ConfigError("key 'amplitudes." + k + "': intensity must be > 0");
        (k == "intensity1" ? sc.intensity1 : sc.intensity2) = x;
      }
    } else if (key == "phases") {
      check_section(key, node, kPhaseKeys);
      for (const auto& [k, v] : node) {
        const double x = to_real(key + "." + k, v.data());
        if (k == "theta1") sc.phases.theta1 = x;
        else if (k == "theta2") sc.phases.theta2 = x;
        else if (k == "phi1") sc.phases.phi1 = x;
        else sc.phases.phi2 = x;
      }
    } else if (key == "sweep") {
      check_section(key, node, kSweepKeys);
      if (node.empty()) continue;
      SweepSpec sw;
      sw.stop = 2.0 * std::numbers::pi;
      const auto var = node.get_optional<std::string>("variable");
      if (!var) throw ConfigError("key 'sweep.variable' is required when [sweep] is present");
      const auto parsed = parse_sweep_variable(trim(*var));
      if (!parsed)
        throw ConfigError("key 'sweep.variable': expected one of theta1, theta2, phi1, phi2, delta; got '" +
                          trim(*var) + "'");
      sw.variable = *parsed;
      if (auto v = node.get_optional<std::string>("start")) sw.start = to_real("sweep.start", *v);
      if (auto v = node.get_optional<std::string>("stop")) sw.stop = to_real("sweep.stop", *v);
      const auto points = node.get_optional<std::string>("points");
      if (!points) throw ConfigError("key 'sweep.points' is required when [sweep] is present");
      const long long n = to_integer("sweep.points", *points);
      if (n < 2) throw ConfigError("key 'sweep.points': must be >= 2, got " + std::to_string(n));
      if (n > 10'000'000) throw ConfigError("key 'sweep.points': must be <= 10000000");
      sw.points = static_cast<int>(n);
      sc.sweep = sw;
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path, std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), overrides);
}

}  // namespace cebench
