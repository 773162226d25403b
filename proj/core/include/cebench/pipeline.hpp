#pragma once

// Source states and their evolution through the bench, up to and including
// the second beam splitter.
//
// The time factors e^{i w t} are not stored in amplitudes. Every stationary
// quantity is independent of them; BenchState carries w1 + w2 as a tag and
// the detector reinstates explicit time dependence where it needs it.
// States are not renormalized: amplitudes A1, A2 stay in the vector.

#include <array>
#include <string>
#include <vector>

#include "cebench/optics.hpp"
#include "cebench/tensor.hpp"

namespace cebench {

inline constexpr double kDefaultOmega1 = 1.0;
inline constexpr double kDefaultOmega2 = 1.3;

struct SourceSpec {
  ComplexScalar amplitude{1.0, 0.0};
  double omega = kDefaultOmega1;

  double intensity() const { return std::norm(amplitude); }
};

/// Source with real amplitude sqrt(intensity).
SourceSpec source_with_intensity(double intensity, double omega);

/// Throws std::invalid_argument unless |amplitude| > 0 and everything is finite.
void validate(const SourceSpec& s);

/// The four tunable phases in radians.
struct PhaseSetting {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  /// Total phase difference theta1 + phi1 - theta2 - phi2.
  double delta() const { return theta1 + phi1 - theta2 - phi2; }
};

void validate(const PhaseSetting& ps);

enum class Stage { Source, PostBS, PostPR, PostPhases, PreBSPrime, PostBSPrime };

const char* to_string(Stage s);

struct BenchState {
  Stage stage = Stage::Source;
  ComplexVector vector = ComplexVector::Zero(kBenchDim);
  /// w1 + w2; stands in for the dropped factor e^{i(w1 + w2) t}.
  double omega_sum = 0.0;
  PhaseSetting phases;
  /// Per-source frequency tags; `dispersed` is set between the prisms and
  /// the inverse prisms, when paths read "b+eps(w)".
  std::array<FrequencyTag, 2> frequencies{};
  bool dispersed = false;

  double norm2() const { return vector.squaredNorm(); }
  std::array<PathLabel, 2> path_labels(Source s) const;
};

/// Single-source states on that source's (path, pol) space: A1|b)|V) and A2|a)|V).
struct SourceStates {
  ComplexVector psi;
  ComplexVector phi;
  FrequencyTag tag1;
  FrequencyTag tag2;
};

SourceStates build_sources(const SourceSpec& s1, const SourceSpec& s2);

/// (1/sqrt2)[psi ⊗ phi + phi ⊗ psi]. Both inputs must be 4-dimensional.
ComplexVector symmetrize(const ComplexVector& psi, const ComplexVector& phi);

/// The 2x2 matrices the pipeline uses. Overridable so checks can be run
/// against a deliberately broken element.
struct BenchOptics {
  ComplexMatrix beam_splitter = cebench::beam_splitter();
  ComplexMatrix pol_swap = cebench::pol_swap();
};

/// |a)(a| ⊗ I + |b)(b| ⊗ op on one source's (path, pol) space.
ComplexMatrix b_branch(const ComplexMatrix& pol_op);

/// Beam splitter on both path factors.
ComplexMatrix beam_splitter_pair(const BenchOptics& optics = {});

/// PR', PR'', PS' and PS'' as one 16x16 unitary.
ComplexMatrix phase_elements(const PhaseSetting& ps);

/// Every stage from Source through PreBSPrime, in order.
std::vector<BenchState> trace_prestate(const SourceSpec& s1, const SourceSpec& s2,
                                       const PhaseSetting& ps, const BenchOptics& optics = {});

/// The symmetrized state after BS and PR with no phases applied.
BenchState symmetrized_state(const SourceSpec& s1, const SourceSpec& s2,
                             const BenchOptics& optics = {});

/// State in front of BS'. Equals (A1A2/sqrt2)[|aVaV) - e^{iΔ}|bHbH)].
BenchState evolve_prestate(const SourceSpec& s1, const SourceSpec& s2, const PhaseSetting& ps,
                           const BenchOptics& optics = {});

/// Throws std::logic_error unless pre.stage == PreBSPrime.
BenchState apply_bs_prime(const BenchState& pre, const BenchOptics& optics = {});

/// Post-BS' state grouped by path pair: index 0..3 = aa, ab, ba, bb; each
/// entry is the 4-vector over (VV, VH, HV, HH).
struct BranchForm {
  std::array<ComplexVector, 4> branches;

  static constexpr std::array<const char*, 4> kNames{"aa", "ab", "ba", "bb"};
};

/// Throws std::logic_error unless post.stage == PostBSPrime.
BranchForm branch_form(const BenchState& post);

}  // namespace cebench
