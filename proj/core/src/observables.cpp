#include "cebench/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cebench/optics.hpp"

namespace cebench {

namespace {

Slot slot_for(Source source, Dof dof) { return dof == Dof::Path ? path_slot(source) : pol_slot(source); }

ComplexMatrix ket_bra(const ComplexVector& k, const ComplexVector& b) { return k * b.adjoint(); }

}  // namespace

ComplexMatrix sigma_factor(const SigmaSpec& spec) {
  if (!std::isfinite(spec.phase)) throw std::invalid_argument("sigma: phase must be finite");
  const ComplexScalar e = std::polar(1.0, sign_value(sign_for(spec.source)) * spec.phase);
  const ComplexVector first = mode_ket(0);
  const ComplexVector second = mode_ket(1);
  switch (spec.branch) {
    case Branch::Full:
      return e * ket_bra(second, first) + std::conj(e) * ket_bra(first, second);
    case Branch::Plus: {
      const ComplexVector v = first + e * second;
      return 0.5 * ket_bra(v, v);
    }
    case Branch::Minus: {
      const ComplexVector v = first - e * second;
      return 0.5 * ket_bra(v, v);
    }
  }
  throw std::invalid_argument("sigma: unknown branch");
}

ComplexMatrix sigma(const SigmaSpec& spec) { return embed(sigma_factor(spec), slot_for(spec.source, spec.dof)); }

IntensityOperator intensity_operator(Source source, double theta, double phi) {
  const ComplexMatrix path = sigma({source, Dof::Path, phi, Branch::Plus});
  const ComplexMatrix pol = sigma({source, Dof::Pol, theta, Branch::Plus});
  return {source, theta, phi, path * pol};
}

ComplexScalar expectation(const ComplexVector& state, const ComplexMatrix& op) {
  if (op.rows() != state.size() || op.cols() != state.size())
    throw std::invalid_argument("expectation: operator and state dimensions differ");
  return state.dot(op * state);
}

ComplexMatrix correlation_operator(const PhaseSetting& ps) {
  validate(ps);
  return sigma({Source::S1, Dof::Path, ps.phi1, Branch::Full}) *
         sigma({Source::S1, Dof::Pol, ps.theta1, Branch::Full}) *
         sigma({Source::S2, Dof::Path, ps.phi2, Branch::Full}) *
         sigma({Source::S2, Dof::Pol, ps.theta2, Branch::Full});
}

ComplexMatrix aa_detection_operator() {
  const ComplexVector ka = ket(Path::a);
  const ComplexMatrix on_a = ka * ka.adjoint();
  return embed(on_a, Slot::Path1) * sigma({Source::S1, Dof::Pol, 0.0, Branch::Plus}) *
         embed(on_a, Slot::Path2) * sigma({Source::S2, Dof::Pol, 0.0, Branch::Plus});
}

TransferReport transfer_check(const BenchState& pre, const BenchState& post, const PhaseSetting& ps) {
  if (pre.stage != Stage::PreBSPrime)
    throw std::logic_error(std::string("transfer_check: pre must be at stage pre-BS', got ") + to_string(pre.stage));
  if (post.stage != Stage::PostBSPrime)
    throw std::logic_error(std::string("transfer_check: post must be at stage post-BS', got ") + to_string(post.stage));
  if (max_abs_diff(post.vector, beam_splitter_pair() * pre.vector) > 1e-10)
    throw std::logic_error("transfer_check: post is not the BS' image of pre");
  const auto differs = [](double x, double y) { return std::abs(x - y) > 1e-10; };
  if (differs(ps.theta1, pre.phases.theta1) || differs(ps.theta2, pre.phases.theta2) ||
      differs(ps.phi1, pre.phases.phi1) || differs(ps.phi2, pre.phases.phi2))
    throw std::logic_error("transfer_check: phase setting does not match the one pre was built with");

  const ComplexVector psi0 = phase_elements(ps).adjoint() * pre.vector;

  const ComplexMatrix phased = intensity_operator(Source::S1, ps.theta1, ps.phi1).matrix *
                               intensity_operator(Source::S2, ps.theta2, ps.phi2).matrix;
  const ComplexMatrix fixed = intensity_operator(Source::S1, 0.0, 0.0).matrix *
                              intensity_operator(Source::S2, 0.0, 0.0).matrix;

  TransferReport r;
  r.symmetrized_phased_ops = expectation(psi0, phased).real();
  r.final_fixed_ops = expectation(post.vector, aa_detection_operator()).real();
  r.prestate_fixed_ops = expectation(pre.vector, fixed).real();
  r.diff_symmetrized_final = r.symmetrized_phased_ops - r.final_fixed_ops;
  r.diff_symmetrized_prestate = r.symmetrized_phased_ops - r.prestate_fixed_ops;
  r.diff_final_prestate = r.final_fixed_ops - r.prestate_fixed_ops;

  const ComplexMatrix u = beam_splitter();
  const ComplexVector ka = ket(Path::a);
  const ComplexMatrix on_a = ka * ka.adjoint();
  r.conjugation_error_s1 =
      max_abs_diff(u.adjoint() * sigma_factor({Source::S1, Dof::Path, 0.0, Branch::Plus}) * u, on_a);
  r.conjugation_error_s2 =
      max_abs_diff(u.adjoint() * sigma_factor({Source::S2, Dof::Path, 0.0, Branch::Plus}) * u, on_a);
  return r;
}

}  // namespace cebench
