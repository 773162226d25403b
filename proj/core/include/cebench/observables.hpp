#pragma once

// Phase-parameterized observables on each source's path and polarization,
// their two-projector decompositions, and the intensity operators built
// from the plus-branch projectors.
//
// Full observable for phase x on one factor, with s = +1 for source 1 and
// s = -1 for source 2:
//
//   sigma = e^{i s x}|2)(1| + e^{-i s x}|1)(2|
//
// where |1), |2) are (|V), |H)) or (|a), |b)). The branches are
//   plus  = ½(|1) + e^{i s x}|2))((1| + e^{-i s x}(2|)
//   minus = ½(|1) - e^{i s x}|2))((1| - e^{-i s x}(2|)
// so sigma = plus - minus.

#include "cebench/pipeline.hpp"
#include "cebench/tensor.hpp"

namespace cebench {

enum class Dof { Path, Pol };
enum class Branch { Full, Plus, Minus };

struct SigmaSpec {
  Source source = Source::S1;
  Dof dof = Dof::Pol;
  double phase = 0.0;
  Branch branch = Branch::Full;
};

/// The 2x2 factor of an observable.
ComplexMatrix sigma_factor(const SigmaSpec& spec);

/// The observable embedded on the bench space.
ComplexMatrix sigma(const SigmaSpec& spec);

struct IntensityOperator {
  Source source = Source::S1;
  double theta = 0.0;
  double phi = 0.0;
  ComplexMatrix matrix;
};

/// (path plus-projector at phi) . (pol plus-projector at theta) on `source`,
/// identity on the other source.
IntensityOperator intensity_operator(Source source, double theta, double phi);

/// state^dagger . op . state. Throws std::invalid_argument on a size mismatch.
ComplexScalar expectation(const ComplexVector& state, const ComplexMatrix& op);

/// sigma^path_1(phi1) sigma^pol_1(theta1) ⊗ sigma^path_2(phi2) sigma^pol_2(theta2).
ComplexMatrix correlation_operator(const PhaseSetting& ps);

/// [|a)(a| sigma^pol_{1,0,+}] ⊗ [|a)(a| sigma^pol_{2,0,+}]: what a detector on
/// the aa branch behind a 45-degree polarizer sees.
ComplexMatrix aa_detection_operator();

/// The three brackets of the transfer chain and their pairwise differences.
struct TransferReport {
  /// (Psi0| I1(theta1, phi1) I2(theta2, phi2) |Psi0)
  double symmetrized_phased_ops = 0.0;
  /// (Psif| [|a)(a| sigma^pol_1,0] ⊗ [|a)(a| sigma^pol_2,0] |Psif)
  double final_fixed_ops = 0.0;
  /// (Psi| I1(0,0) I2(0,0) |Psi)
  double prestate_fixed_ops = 0.0;
  double diff_symmetrized_final = 0.0;
  double diff_symmetrized_prestate = 0.0;
  double diff_final_prestate = 0.0;
  /// max |U^dagger sigma^path_{s,0,+} U - |a)(a|| for each source.
  double conjugation_error_s1 = 0.0;
  double conjugation_error_s2 = 0.0;
};

/// Evaluates the chain for `pre` and `post = apply_bs_prime(pre)`. Psi0 is
/// recovered by undoing the phase elements of `ps` on `pre`.
/// Throws std::logic_error on a stage mismatch, or if `post` is not BS' of `pre`
/// or `ps` is not the setting `pre` was built with.
TransferReport transfer_check(const BenchState& pre, const BenchState& post, const PhaseSetting& ps);

}  // namespace cebench
