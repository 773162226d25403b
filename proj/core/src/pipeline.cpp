#include "cebench/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cebench {

SourceSpec source_with_intensity(double intensity, double omega) {
  if (!(intensity > 0.0) || !std::isfinite(intensity))
    throw std::invalid_argument("source intensity must be positive and finite");
  return {ComplexScalar(std::sqrt(intensity), 0.0), omega};
}

void validate(const SourceSpec& s) {
  if (!(std::abs(s.amplitude) > 0.0)) throw std::invalid_argument("source amplitude must be nonzero");
  if (!std::isfinite(s.amplitude.real()) || !std::isfinite(s.amplitude.imag()) ||
      !std::isfinite(s.omega))
    throw std::invalid_argument("source parameters must be finite");
}

void validate(const PhaseSetting& ps) {
  if (!std::isfinite(ps.theta1) || !std::isfinite(ps.theta2) || !std::isfinite(ps.phi1) ||
      !std::isfinite(ps.phi2))
    throw std::invalid_argument("phases must be finite");
}

const char* to_string(Stage s) {
  switch (s) {
    case Stage::Source: return "source";
    case Stage::PostBS: return "post-BS";
    case Stage::PostPR: return "post-PR";
    case Stage::PostPhases: return "post-phases";
    case Stage::PreBSPrime: return "pre-BS'";
    case Stage::PostBSPrime: return "post-BS'";
  }
  return "unknown";
}

std::array<PathLabel, 2> BenchState::path_labels(Source s) const {
  std::array<PathLabel, 2> labels{PathLabel{Path::a, std::nullopt}, PathLabel{Path::b, std::nullopt}};
  if (dispersed) {
    const FrequencyTag& tag = frequencies[s == Source::S1 ? 0 : 1];
    for (auto& l : labels) l = apply_prism(l, tag);
  }
  return labels;
}

SourceStates build_sources(const SourceSpec& s1, const SourceSpec& s2) {
  validate(s1);
  validate(s2);
  // P1 and P2 pass vertical polarization only; source 1 enters along b,
  // source 2 along a.
  return {s1.amplitude * source_basis_vector(Path::b, Pol::V),
          s2.amplitude * source_basis_vector(Path::a, Pol::V),
          {Source::S1, s1.omega},
          {Source::S2, s2.omega}};
}

ComplexVector symmetrize(const ComplexVector& psi, const ComplexVector& phi) {
  if (psi.size() != kSourceDim || phi.size() != kSourceDim)
    throw std::invalid_argument("symmetrize: both states must live on a 4-dimensional source space");
  return (kron(psi, phi) + kron(phi, psi)) / std::numbers::sqrt2;
}

ComplexMatrix b_branch(const ComplexMatrix& pol_op) {
  const ComplexVector ka = ket(Path::a);
  const ComplexVector kb = ket(Path::b);
  return kron(ka * ka.adjoint(), identity(kModeDim)) + kron(kb * kb.adjoint(), pol_op);
}

ComplexMatrix beam_splitter_pair(const BenchOptics& optics) {
  return embed(optics.beam_splitter, Slot::Path1) * embed(optics.beam_splitter, Slot::Path2);
}

ComplexMatrix phase_elements(const PhaseSetting& ps) {
  validate(ps);
  const ComplexMatrix rotators = embed_source(b_branch(pol_phase(ps.theta1, PhaseSign::Plus)), Source::S1) *
                                 embed_source(b_branch(pol_phase(ps.theta2, PhaseSign::Minus)), Source::S2);
  const ComplexMatrix shifters = embed(path_phase(ps.phi1, PhaseSign::Plus), Slot::Path1) *
                                 embed(path_phase(ps.phi2, PhaseSign::Minus), Slot::Path2);
  return shifters * rotators;
}

std::vector<BenchState> trace_prestate(const SourceSpec& s1, const SourceSpec& s2,
                                       const PhaseSetting& ps, const BenchOptics& optics) {
  validate(ps);
  const SourceStates src = build_sources(s1, s2);

  // BS and PR act identically on both sources, so they commute with the
  // exchange and the symmetrized state can be formed at the source stage.
  // The phase elements differ per source and act on the S1 and S2 tensor
  // slots of the symmetrized state.
  BenchState state;
  state.stage = Stage::Source;
  state.vector = symmetrize(src.psi, src.phi);
  state.omega_sum = s1.omega + s2.omega;
  state.phases = ps;
  state.frequencies = {src.tag1, src.tag2};

  std::vector<BenchState> trace;
  trace.reserve(5);
  trace.push_back(state);

  state.stage = Stage::PostBS;
  state.vector = beam_splitter_pair(optics) * state.vector;
  trace.push_back(state);

  const ComplexMatrix rotate_b = b_branch(optics.pol_swap);
  state.stage = Stage::PostPR;
  state.vector = embed_source(rotate_b, Source::S1) * embed_source(rotate_b, Source::S2) * state.vector;
  trace.push_back(state);

  const ComplexMatrix prisms = embed(prism(s1.omega), Slot::Path1) * embed(prism(s2.omega), Slot::Path2);
  state.stage = Stage::PostPhases;
  state.dispersed = true;
  state.vector = phase_elements(ps) * (prisms * state.vector);
  trace.push_back(state);

  const ComplexMatrix unprisms =
      embed(inverse_prism(s1.omega), Slot::Path1) * embed(inverse_prism(s2.omega), Slot::Path2);
  state.stage = Stage::PreBSPrime;
  state.dispersed = false;
  state.vector = unprisms * state.vector;
  trace.push_back(state);

  return trace;
}

BenchState symmetrized_state(const SourceSpec& s1, const SourceSpec& s2, const BenchOptics& optics) {
  return trace_prestate(s1, s2, PhaseSetting{}, optics).at(2);
}

BenchState evolve_prestate(const SourceSpec& s1, const SourceSpec& s2, const PhaseSetting& ps,
                           const BenchOptics& optics) {
  return trace_prestate(s1, s2, ps, optics).back();
}

BenchState apply_bs_prime(const BenchState& pre, const BenchOptics& optics) {
  if (pre.stage != Stage::PreBSPrime)
    throw std::logic_error(std::string("apply_bs_prime: expected stage pre-BS', got ") + to_string(pre.stage));
  BenchState post = pre;
  post.stage = Stage::PostBSPrime;
  post.vector = beam_splitter_pair(optics) * pre.vector;
  return post;
}

BranchForm branch_form(const BenchState& post) {
  if (post.stage != Stage::PostBSPrime)
    throw std::logic_error(std::string("branch_form: expected stage post-BS', got ") + to_string(post.stage));
  BranchForm form;
  for (int p1 = 0; p1 < 2; ++p1) {
    for (int p2 = 0; p2 < 2; ++p2) {
      ComplexVector pol(4);
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
          pol(2 * s1 + s2) = post.vector(basis_index(Path(p1), Pol(s1), Path(p2), Pol(s2)));
      form.branches[2 * p1 + p2] = pol;
    }
  }
  return form;
}

}  // namespace cebench
