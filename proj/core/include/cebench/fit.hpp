#pragma once

#include <span>

namespace cebench {

/// Least-squares fit values ≈ offset + amplitude·cos(delta).
struct CosineFit {
  double offset = 0.0;
  double amplitude = 0.0;
  /// max |value - fitted value| over the samples
  double max_residual = 0.0;
};

/// With `with_offset == false` the offset is pinned to zero. Throws
/// std::invalid_argument when the spans differ in length or have fewer
/// than two samples.
CosineFit fit_cosine(std::span<const double> deltas, std::span<const double> values, bool with_offset);

}  // namespace cebench
