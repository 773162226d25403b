#include "cebench/optics.hpp"

#include "test_support.hpp"

namespace cebench {
namespace {

using testing::kInstances;
using testing::kPi;
using testing::kSqrt2;
using testing::kTol;
using testing::Random;

ComplexVector plus45() { return (ket(Pol::V) + ket(Pol::H)) / kSqrt2; }
ComplexVector minus45() { return (ket(Pol::V) - ket(Pol::H)) / kSqrt2; }

TEST(BeamSplitter, ActionOnPathKets) {
  EXPECT_LT(max_abs_diff(beam_splitter() * ket(Path::a), ComplexVector((ket(Path::a) + ket(Path::b)) / kSqrt2)), kTol);
  EXPECT_LT(max_abs_diff(beam_splitter() * ket(Path::b), ComplexVector((ket(Path::a) - ket(Path::b)) / kSqrt2)), kTol);
  EXPECT_LT(max_abs_diff(beam_splitter() * beam_splitter(), identity(2)), kTol);
}

TEST(BeamSplitter, MatchesKetBraDefinition) {
  const ComplexVector a = ket(Path::a), b = ket(Path::b);
  const ComplexMatrix expected =
      (a * a.adjoint() - b * b.adjoint() + a * b.adjoint() + b * a.adjoint()) / kSqrt2;
  EXPECT_LT(max_abs_diff(beam_splitter(), expected), kTol);
}

TEST(PolSwap, ExchangesVAndH) {
  EXPECT_LT(max_abs_diff(pol_swap() * ket(Pol::V), ket(Pol::H)), kTol);
  EXPECT_LT(max_abs_diff(pol_swap() * ket(Pol::H), ket(Pol::V)), kTol);
  EXPECT_LT(max_abs_diff(pol_swap() * pol_swap(), identity(2)), kTol);
}

TEST(PolPhase, Examples) {
  const double theta = 0.731;
  EXPECT_LT(max_abs_diff(pol_phase(theta, PhaseSign::Plus) * ket(Pol::H),
                         ComplexVector(std::polar(1.0, theta) * ket(Pol::H))),
            kTol);
  EXPECT_LT(max_abs_diff(pol_phase(0.0, PhaseSign::Plus), identity(2)), kTol);
  EXPECT_LT(max_abs_diff(pol_phase(0.0, PhaseSign::Minus), identity(2)), kTol);
  EXPECT_LT(max_abs_diff(pol_phase(kPi, PhaseSign::Plus) * plus45(), minus45()), kTol);
  EXPECT_LT(max_abs_diff(pol_phase(theta, PhaseSign::Minus) * ket(Pol::H),
                         ComplexVector(std::polar(1.0, -theta) * ket(Pol::H))),
            kTol);
}

TEST(PathPhase, Examples) {
  const double phi = -1.2;
  EXPECT_LT(max_abs_diff(path_phase(phi, PhaseSign::Plus) * ket(Path::b),
                         ComplexVector(std::polar(1.0, phi) * ket(Path::b))),
            kTol);
  EXPECT_LT(max_abs_diff(path_phase(0.0, PhaseSign::Minus), identity(2)), kTol);
  EXPECT_LT(max_abs_diff(path_phase(kPi / 2, PhaseSign::Minus) * ket(Path::b),
                         ComplexVector(ComplexScalar(0.0, -1.0) * ket(Path::b))),
            kTol);
}

TEST(PhaseElements, InversePairsGiveIdentity) {
  Random rng;
  for (int i = 0; i < kInstances; ++i) {
    const double x = rng.angle();
    for (auto s : {PhaseSign::Plus, PhaseSign::Minus}) {
      EXPECT_LT(max_abs_diff(pol_phase(x, s) * pol_phase(-x, s), identity(2)), kTol);
      EXPECT_LT(max_abs_diff(path_phase(x, s) * path_phase(-x, s), identity(2)), kTol);
      EXPECT_TRUE(is_unitary(pol_phase(x, s)));
      EXPECT_TRUE(is_unitary(path_phase(x, s)));
    }
  }
}

TEST(PhaseElements, RejectNonFinitePhase) {
  EXPECT_THROW(pol_phase(std::nan(""), PhaseSign::Plus), std::invalid_argument);
  EXPECT_THROW(path_phase(INFINITY, PhaseSign::Minus), std::invalid_argument);
}

TEST(Prism, RoundTripIsIdentityAndRelabelsPath) {
  EXPECT_LT(max_abs_diff(inverse_prism(1.3) * prism(1.3), identity(2)), kTol);
  const FrequencyTag w1{Source::S1, 1.0};
  const PathLabel b1 = apply_prism({Path::b, std::nullopt}, w1);
  EXPECT_EQ(b1.str(), "b+eps(w1)");
  EXPECT_EQ(apply_inverse_prism(b1, w1).str(), "b");
  EXPECT_THROW(apply_prism(b1, w1), std::logic_error);
  EXPECT_THROW(apply_inverse_prism({Path::a, std::nullopt}, w1), std::logic_error);
  EXPECT_THROW(apply_inverse_prism(b1, FrequencyTag{Source::S2, 1.3}), std::logic_error);
}

TEST(Polarizer45, Examples) {
  const ComplexMatrix p = polarizer_45();
  EXPECT_LT(max_abs_diff(p * plus45(), plus45()), kTol);
  EXPECT_LT((p * minus45()).norm(), kTol);
  EXPECT_LT(max_abs_diff(p * ket(Pol::V), ComplexVector(0.5 * (ket(Pol::V) + ket(Pol::H)))), kTol);
}

TEST(Polarizer45, IdempotentHermitianAndEmbedded) {
  for (const ComplexMatrix& p : {polarizer_45(), polarizer_45(Source::S1), polarizer_45(Source::S2)}) {
    EXPECT_LT(max_abs_diff(p * p, p), kTol);
    EXPECT_TRUE(is_hermitian(p));
  }
  EXPECT_LT(max_abs_diff(polarizer_45(Source::S2), embed(polarizer_45(), Slot::Pol2)), kTol);
}

TEST(ElementMatrix, DispatchesByKind) {
  EXPECT_LT(max_abs_diff(element_matrix({ElementKind::BeamSplitter}), beam_splitter()), kTol);
  EXPECT_LT(max_abs_diff(element_matrix({ElementKind::PolPhase, 0.4, PhaseSign::Minus}),
                         pol_phase(0.4, PhaseSign::Minus)),
            kTol);
  EXPECT_LT(max_abs_diff(element_matrix({ElementKind::Polarizer45}), polarizer_45()), kTol);
  EXPECT_STRNE(to_string(ElementKind::InversePrism), to_string(ElementKind::Prism));
}

}  // namespace
}  // namespace cebench
