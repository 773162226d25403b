#include "cebench/observables.hpp"

#include <Eigen/Eigenvalues>

#include "test_support.hpp"

namespace cebench {
namespace {

using testing::kInstances;
using testing::kPi;
using testing::kSqrt2;
using testing::kTol;
using testing::Random;
using testing::unit1;
using testing::unit2;

TEST(Sigma, PolarizationAtZeroIsSwap) {
  const ComplexMatrix s = sigma({Source::S1, Dof::Pol, 0.0, Branch::Full});
  EXPECT_LT(max_abs_diff(s * basis_vector(Path::a, Pol::V, Path::a, Pol::V),
                         basis_vector(Path::a, Pol::H, Path::a, Pol::V)),
            kTol);
}

TEST(Sigma, FactorCarriesSourceSign) {
  const double x = 0.6;
  const ComplexMatrix f1 = sigma_factor({Source::S1, Dof::Path, x, Branch::Full});
  const ComplexMatrix f2 = sigma_factor({Source::S2, Dof::Path, x, Branch::Full});
  EXPECT_NEAR(std::abs(f1(1, 0) - std::polar(1.0, x)), 0.0, kTol);
  EXPECT_NEAR(std::abs(f1(0, 1) - std::polar(1.0, -x)), 0.0, kTol);
  EXPECT_NEAR(std::abs(f2(1, 0) - std::polar(1.0, -x)), 0.0, kTol);
  EXPECT_THROW(sigma_factor({Source::S1, Dof::Pol, std::nan(""), Branch::Full}), std::invalid_argument);
}

TEST(Sigma, BranchesAreComplementaryProjectors) {
  Random rng;
  const ComplexMatrix id2 = identity(2);
  for (int i = 0; i < kInstances; ++i) {
    const SigmaSpec base{i % 2 ? Source::S1 : Source::S2, (i / 2) % 2 ? Dof::Path : Dof::Pol, rng.angle()};
    SigmaSpec plus = base, minus = base;
    plus.branch = Branch::Plus;
    minus.branch = Branch::Minus;
    const ComplexMatrix p = sigma_factor(plus), m = sigma_factor(minus), full = sigma_factor(base);
    EXPECT_LT(max_abs_diff(p * p, p), kTol);
    EXPECT_LT(max_abs_diff(m * m, m), kTol);
    EXPECT_LT((p * m).cwiseAbs().maxCoeff(), kTol);
    EXPECT_LT(max_abs_diff(p + m, id2), kTol);
    EXPECT_LT(max_abs_diff(p - m, full), kTol);
    EXPECT_LT(max_abs_diff(full * full, id2), kTol);
    EXPECT_TRUE(is_hermitian(full));
  }
}

TEST(IntensityOperator, ActionOnAVAV) {
  const IntensityOperator op = intensity_operator(Source::S1, 0.0, 0.0);
  const ComplexVector out = op.matrix * basis_vector(Path::a, Pol::V, Path::a, Pol::V);
  const ComplexVector s1 = kron(ComplexVector(ket(Path::a) + ket(Path::b)), ComplexVector(ket(Pol::V) + ket(Pol::H)));
  const ComplexVector expected = 0.25 * kron(s1, kron(ket(Path::a), ket(Pol::V)));
  EXPECT_LT(max_abs_diff(out, expected), kTol);
}

TEST(IntensityOperator, EigenvaluesAreZeroOrOne) {
  Random rng;
  for (int i = 0; i < kInstances; ++i) {
    const IntensityOperator op = intensity_operator(i % 2 ? Source::S1 : Source::S2, rng.angle(), rng.angle());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(op.matrix);
    for (double ev : es.eigenvalues()) EXPECT_NEAR(std::min(std::abs(ev), std::abs(ev - 1.0)), 0.0, kTol);
    EXPECT_NEAR(op.matrix.trace().real(), 4.0, kTol);
  }
}

TEST(Commutation, SourceOneOperatorsCommuteWithSourceTwo) {
  Random rng;
  for (int i = 0; i < kInstances; ++i) {
    const ComplexMatrix x = sigma({Source::S1, i % 2 ? Dof::Path : Dof::Pol, rng.angle(), Branch(i % 3)});
    const ComplexMatrix y = sigma({Source::S2, (i / 2) % 2 ? Dof::Path : Dof::Pol, rng.angle(), Branch((i / 3) % 3)});
    EXPECT_LT((x * y - y * x).cwiseAbs().maxCoeff(), kTol);
    const ComplexMatrix u = intensity_operator(Source::S1, rng.angle(), rng.angle()).matrix;
    const ComplexMatrix v = intensity_operator(Source::S2, rng.angle(), rng.angle()).matrix;
    EXPECT_LT((u * v - v * u).cwiseAbs().maxCoeff(), kTol);
  }
}

TEST(Expectation, BasisAndErrors) {
  EXPECT_NEAR(std::abs(expectation(basis_vector(Path::a, Pol::V, Path::a, Pol::V), identity(16)) - 1.0), 0.0, kTol);
  EXPECT_THROW(expectation(ComplexVector::Zero(4), identity(16)), std::invalid_argument);
}

TEST(Expectation, IntensityPairOnSymmetrizedStateIsProportionalToOneMinusCos) {
  Random rng;
  const ComplexVector psi0 = symmetrized_state(unit1(), unit2()).vector;
  for (int i = 0; i < 20; ++i) {
    const PhaseSetting ps = rng.phases();
    const ComplexMatrix pair = intensity_operator(Source::S1, ps.theta1, ps.phi1).matrix *
                               intensity_operator(Source::S2, ps.theta2, ps.phi2).matrix;
    const ComplexScalar v = expectation(psi0, pair);
    EXPECT_NEAR(v.imag(), 0.0, kTol);
    EXPECT_NEAR(v.real(), (1.0 - std::cos(ps.delta())) / 16.0, kTol);
  }
}

TEST(CorrelationOperator, IsProductOfFourFullSigmas) {
  const PhaseSetting ps{0.1, 0.2, 0.3, 0.4};
  const ComplexMatrix expected = sigma({Source::S1, Dof::Path, ps.phi1}) * sigma({Source::S1, Dof::Pol, ps.theta1}) *
                                 sigma({Source::S2, Dof::Path, ps.phi2}) * sigma({Source::S2, Dof::Pol, ps.theta2});
  EXPECT_LT(max_abs_diff(correlation_operator(ps), expected), kTol);
  EXPECT_TRUE(is_hermitian(aa_detection_operator()));
}

TEST(TransferCheck, ThreeBracketsAgreeOnRandomSettings) {
  Random rng;
  for (int i = 0; i < kInstances; ++i) {
    const SourceSpec a = rng.source(1.0), b = rng.source(1.3);
    const PhaseSetting ps = rng.phases();
    const BenchState pre = evolve_prestate(a, b, ps);
    const TransferReport r = transfer_check(pre, apply_bs_prime(pre), ps);
    const double scale = a.intensity() * b.intensity();
    EXPECT_NEAR(r.symmetrized_phased_ops / scale, (1.0 - std::cos(ps.delta())) / 16.0, kTol);
    EXPECT_NEAR(r.diff_symmetrized_final / scale, 0.0, kTol);
    EXPECT_NEAR(r.diff_symmetrized_prestate / scale, 0.0, kTol);
    EXPECT_NEAR(r.diff_final_prestate / scale, 0.0, kTol);
    EXPECT_LT(r.conjugation_error_s1, kTol);
    EXPECT_LT(r.conjugation_error_s2, kTol);
  }
}

TEST(TransferCheck, MatchesFrozenOracleBrackets) {
  const SourceSpec a{std::polar(0.8, 0.3), kDefaultOmega1};
  const SourceSpec b{std::polar(1.7, -1.1), kDefaultOmega2};
  const PhaseSetting ps{0.3, -0.2, 1.1, 0.4};
  const BenchState pre = evolve_prestate(a, b, ps);
  const TransferReport r = transfer_check(pre, apply_bs_prime(pre), ps);
  EXPECT_NEAR(r.symmetrized_phased_ops, 0.073711443582496483, kTol);
  EXPECT_NEAR(r.final_fixed_ops, 0.073711443582496483, kTol);
  EXPECT_NEAR(r.prestate_fixed_ops, 0.073711443582496469, kTol);
}

TEST(TransferCheck, RejectsMismatchedInputs) {
  const PhaseSetting ps{0.5, 0.0, 0.0, 0.0};
  const BenchState pre = evolve_prestate(unit1(), unit2(), ps);
  const BenchState post = apply_bs_prime(pre);
  EXPECT_THROW(transfer_check(post, post, ps), std::logic_error);
  EXPECT_THROW(transfer_check(pre, pre, ps), std::logic_error);
  EXPECT_THROW(transfer_check(pre, post, PhaseSetting{}), std::logic_error);
  const BenchState other = apply_bs_prime(evolve_prestate(unit1(), unit2(), {kPi / kSqrt2, 0.0, 0.0, 0.0}));
  EXPECT_THROW(transfer_check(pre, other, ps), std::logic_error);
}

}  // namespace
}  // namespace cebench
