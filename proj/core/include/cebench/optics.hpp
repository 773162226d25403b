#pragma once

// 2x2 unitaries and projectors for the elements of the bench.
//
// Path operators act on (|a), |b)), polarization operators on (|V), |H)).

#include <optional>
#include <string>

#include "cebench/tensor.hpp"

namespace cebench {

/// Direction of the phase exponent: +1 for the source-1 elements, -1 for source 2.
enum class PhaseSign : int { Plus = 1, Minus = -1 };

constexpr double sign_value(PhaseSign s) { return static_cast<double>(static_cast<int>(s)); }
constexpr PhaseSign sign_for(Source s) { return s == Source::S1 ? PhaseSign::Plus : PhaseSign::Minus; }

/// (1/sqrt2) [[1, 1], [1, -1]]. Hermitian and unitary.
ComplexMatrix beam_splitter();

/// |H)(V| + |V)(H|.
ComplexMatrix pol_swap();

/// diag(1, e^{i sign theta}) on (|V), |H)).
ComplexMatrix pol_phase(double theta, PhaseSign sign);

/// diag(1, e^{i sign phi}) on (|a), |b)).
ComplexMatrix path_phase(double phi, PhaseSign sign);

// Prisms only separate the two frequencies spatially and are undone exactly
// by the inverse prisms, so their amplitude action is the identity. The
// dispersion is tracked on path labels instead.
ComplexMatrix prism(double omega);
ComplexMatrix inverse_prism(double omega);

/// Rank-1 projector onto (|V) + |H))/sqrt2.
ComplexMatrix polarizer_45();
/// polarizer_45() lifted onto the given source's polarization factor.
ComplexMatrix polarizer_45(Source source);

/// Frequency carried by one source after its filter.
struct FrequencyTag {
  Source source = Source::S1;
  double omega = 0.0;
};

/// A path label, possibly displaced by a prism: "b" or "b+eps(w1)".
struct PathLabel {
  Path path = Path::a;
  std::optional<FrequencyTag> dispersion;

  std::string str() const;
};

PathLabel apply_prism(const PathLabel& label, const FrequencyTag& tag);
/// Throws std::logic_error if the label is not dispersed by the same tag.
PathLabel apply_inverse_prism(const PathLabel& label, const FrequencyTag& tag);

enum class ElementKind {
  BeamSplitter,
  PolSwap,
  PolPhase,
  PathPhase,
  Prism,
  InversePrism,
  Polarizer45,
};

struct ElementSpec {
  ElementKind kind = ElementKind::BeamSplitter;
  double phase = 0.0;
  PhaseSign sign = PhaseSign::Plus;
  Source source = Source::S1;
};

/// 2x2 matrix for an element. Throws std::invalid_argument on a non-finite phase.
ComplexMatrix element_matrix(const ElementSpec& spec);

const char* to_string(ElementKind kind);

}  // namespace cebench
