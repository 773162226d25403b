#pragma once

// Four-term CHSH-type functionals of the equal-intensity correlation and a
// grid-plus-refinement search for their extrema.
//
// The sign pattern is (+, +, -, +) with the minus on the (primed, unprimed)
// term. Each term is bounded by 1, so |S| <= 2 is the noncontextual bound
// the functionals are compared against.

#include <array>

namespace cebench {

inline constexpr double kNoncontextualBound = 2.0;

/// cos(theta + phi) with theta = theta1 - theta2, phi = phi1 - phi2.
double c_bar(double theta, double phi);

/// cos(theta1 - phi2): the correlation with theta2 = alpha, phi1 = beta, alpha = beta.
double c_tilde(double theta1, double phi2);

double s_value(double theta, double theta_p, double phi, double phi_p);

/// Throws std::invalid_argument unless alpha - beta = 0 (within 1e-12).
double s_prime_value(double theta1, double theta1_p, double phi2, double phi2_p, double alpha, double beta);

enum class ChshCase : int { One = 1, Two = 2 };

struct ChshSetting {
  ChshCase which = ChshCase::One;
  /// (theta, phi) for case 1, (theta1, phi2) for case 2
  std::array<double, 2> primary{};
  /// (theta', phi') for case 1, (theta1', phi2') for case 2
  std::array<double, 2> primed{};
  /// (alpha, beta); case 2 only
  std::array<double, 2> anchors{};
};

double evaluate(const ChshSetting& s);

/// theta = 0, theta' = π/2, phi = π/4, phi' = -π/4.
ChshSetting case1_violation();
/// theta1 = α, theta1' = π/2 + α, phi2 = β - π/4, phi2' = β + π/4 with α = β = anchor.
ChshSetting case2_violation(double anchor = 0.0);

struct ScanResult {
  double max_abs = 0.0;
  /// signed value at the maximizer
  double value = 0.0;
  /// best |S| on the grid before refinement
  double grid_max_abs = 0.0;
  /// (primary.0, primed.0, primary.1, primed.1), i.e. (theta, theta', phi, phi')
  std::array<double, 4> angles{};
};

/// Exhaustive search on a resolution^4 grid over [0, 2π)^4 followed by a
/// pattern-search refinement. Throws std::invalid_argument if resolution < 8.
ScanResult scan_max(ChshCase which, int resolution);

}  // namespace cebench
