#include "cebench/contextuality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cebench/tensor.hpp"

namespace cebench {

using std::numbers::pi;

double c_bar(double theta, double phi) { return std::cos(theta + phi); }

double c_tilde(double theta1, double phi2) { return std::cos(theta1 - phi2); }

double s_value(double theta, double theta_p, double phi, double phi_p) {
  return c_bar(theta, phi) + c_bar(theta, phi_p) - c_bar(theta_p, phi) + c_bar(theta_p, phi_p);
}

double s_prime_value(double theta1, double theta1_p, double phi2, double phi2_p, double alpha, double beta) {
  if (std::abs(alpha - beta) > kTolerance)
    throw std::invalid_argument("s_prime_value: requires alpha - beta = 0");
  return c_tilde(theta1, phi2) + c_tilde(theta1, phi2_p) - c_tilde(theta1_p, phi2) + c_tilde(theta1_p, phi2_p);
}

double evaluate(const ChshSetting& s) {
  if (s.which == ChshCase::One) return s_value(s.primary[0], s.primed[0], s.primary[1], s.primed[1]);
  return s_prime_value(s.primary[0], s.primed[0], s.primary[1], s.primed[1], s.anchors[0], s.anchors[1]);
}

ChshSetting case1_violation() { return {ChshCase::One, {0.0, pi / 4}, {pi / 2, -pi / 4}, {0.0, 0.0}}; }

ChshSetting case2_violation(double anchor) {
  return {ChshCase::Two, {anchor, anchor - pi / 4}, {pi / 2 + anchor, anchor + pi / 4}, {anchor, anchor}};
}

namespace {

double functional(ChshCase which, const std::array<double, 4>& x) {
  // x = (theta, theta', phi, phi')
  if (which == ChshCase::One) return s_value(x[0], x[1], x[2], x[3]);
  return c_tilde(x[0], x[2]) + c_tilde(x[0], x[3]) - c_tilde(x[1], x[2]) + c_tilde(x[1], x[3]);
}

// Hooke-Jeeves pattern search on |S|, shrinking the step until it is
// below `min_step`.
std::array<double, 4> refine(ChshCase which, std::array<double, 4> x, double step, double min_step) {
  double best = std::abs(functional(which, x));
  while (step > min_step) {
    bool improved = false;
    for (std::size_t d = 0; d < x.size(); ++d) {
      for (double dir : {1.0, -1.0}) {
        std::array<double, 4> trial = x;
        trial[d] += dir * step;
        const double v = std::abs(functional(which, trial));
        if (v > best) {
          best = v;
          x = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return x;
}

}  // namespace

ScanResult scan_max(ChshCase which, int resolution) {
  if (resolution < 8) throw std::invalid_argument("scan_max: resolution must be at least 8");
  const int n = resolution;
  const double h = 2.0 * pi / n;

  // Every term is cos(g_i ± g_j), so one table indexed modulo n covers the grid.
  std::vector<double> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) table[static_cast<std::size_t>(i)] = std::cos(i * h);
  const int sign = which == ChshCase::One ? 1 : -1;
  const auto term = [&](int i, int j) {
    return table[static_cast<std::size_t>(((i + sign * j) % n + n) % n)];
  };

  double best = -1.0;
  std::array<int, 4> arg{};
  for (int t = 0; t < n; ++t)
    for (int tp = 0; tp < n; ++tp)
      for (int p = 0; p < n; ++p) {
        const double a = term(t, p);
        const double c = term(tp, p);
        for (int pp = 0; pp < n; ++pp) {
          const double v = std::abs(a + term(t, pp) - c + term(tp, pp));
          if (v > best) {
            best = v;
            arg = {t, tp, p, pp};
          }
        }
      }

  std::array<double, 4> x{arg[0] * h, arg[1] * h, arg[2] * h, arg[3] * h};
  x = refine(which, x, h, 1e-12);

  ScanResult r;
  r.grid_max_abs = best;
  r.angles = x;
  r.value = functional(which, x);
  r.max_abs = std::abs(r.value);
  return r;
}

}  // namespace cebench
