#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unient/bipartite.hpp"
#include "unient/errors.hpp"
#include "unient/multipartite.hpp"
#include "unient/random.hpp"

using namespace unient;

namespace {

PureState ghz(std::size_t n) {
  Vector v = Vector::Zero(1 << n);
  v(0) = v((1 << n) - 1) = 1.0 / std::sqrt(2.0);
  return PureState(v, Dims(n, 2));
}

PureState w3() {
  Vector v = Vector::Zero(8);
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return PureState(v, {2, 2, 2});
}

const GlobalMeasureKind kSumQS21{GlobalForm::SumQS, MeasureParams::qs(2, 1)};

// Sum form from the explicit reduced spectra of each block.
double sum_form_oracle(const PureState& psi, const Partition& part, const MeasureParams& p) {
  double s = 0.0;
  for (const auto& block : part.blocks()) {
    double tr = 0.0;
    for (double x : oracle::eigenvalues(oracle::reduced(psi.amplitudes(), psi.dims(), block)))
      if (x > 1e-14) tr += std::pow(x, p.a());
    s += std::pow(tr, p.b());
  }
  return (static_cast<double>(part.size()) - s) / (2.0 * (p.a() - 1.0) * p.b());
}

}  // namespace

TEST(GlobalMeasure, ReferenceStates) {
  const Partition abc = Partition::parse("A|B|C");
  EXPECT_NEAR(global_measure_pure(ghz(3), abc, kSumQS21), 0.75, 1e-14);
  EXPECT_NEAR(global_measure_pure(w3(), abc, kSumQS21), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(global_measure_pure(ghz(3), abc, {GlobalForm::ProdQS, MeasureParams::qs(3, 1)}), 7.0 / 16.0, 1e-14);
}

TEST(GlobalMeasure, SumFormMatchesOracle) {
  Rng rng({51, 0});
  for (int i = 0; i < 10; ++i) {
    const PureState psi = sample_haar_pure({2, 2, 3}, rng);
    for (const char* part : {"A|B|C", "AB|C", "AC|B"}) {
      const Partition g = Partition::parse(part);
      const auto p = MeasureParams::qs(2.5, 0.7);
      EXPECT_NEAR(global_measure_pure(psi, g, {GlobalForm::SumQS, p}), sum_form_oracle(psi, g, p), 1e-12);
    }
  }
}

TEST(GlobalMeasure, TwoBlocksReduceToBipartite) {
  Rng rng({52, 0});
  const PureState psi = sample_haar_pure({2, 3}, rng);
  const Partition ab = Partition::parse("A|B");
  for (auto p : {MeasureParams::qs(2, 2), MeasureParams::rt(0.5, 0.5)}) {
    const GlobalForm f = p.family() == Family::QS ? GlobalForm::SumQS : GlobalForm::SumRT;
    EXPECT_NEAR(global_measure_pure(psi, ab, {f, p}), entanglement_pure(psi, ab, p), 1e-13);
  }
}

TEST(GlobalMeasure, ProductStatesAreExactlyZero) {
  const PureState psi = tensor(tensor(PureState::basis({2}, {0}), PureState::basis({3}, {1})), PureState::basis({2}, {1}));
  for (auto f : {GlobalForm::SumQS, GlobalForm::ProdQS})
    EXPECT_EQ(global_measure_pure(psi, Partition::parse("A|B|C"), {f, MeasureParams::qs(2, 1)}), 0.0);
  for (auto f : {GlobalForm::SumRT, GlobalForm::ProdRT})
    EXPECT_EQ(global_measure_pure(psi, Partition::parse("A|B|C"), {f, MeasureParams::rt(0.5, 1)}), 0.0);
}

TEST(GlobalMeasure, FamilyMustMatchForm) {
  EXPECT_THROW(GlobalMeasureKind(GlobalForm::SumQS, MeasureParams::rt(0.5, 1)), DomainError);
  EXPECT_THROW(GlobalMeasureKind(GlobalForm::ProdRT, MeasureParams::qs(2, 1)), DomainError);
}

TEST(GlobalMeasure, FidelityReduction) {
  Rng rng({53, 0});
  for (int i = 0; i < 50; ++i) {
    const auto f = fidelity_reduction_check(sample_haar_pure({2, 2, 2}, rng));
    EXPECT_NEAR(f.lhs, f.rhs, 1e-10);
  }
  const auto g = fidelity_reduction_check(ghz(3));
  EXPECT_NEAR(g.rhs, (1.0 - 1.0 / 8.0) / 2.0, 1e-14);
}

TEST(GlobalMeasure, MixedTwoPartyMatchesWerner) {
  const RoofResult r = global_measure_mixed(werner_state(0.8), Partition::parse("A|B"),
                                            {GlobalForm::SumQS, MeasureParams::qs(2, 2)}, {});
  EXPECT_GE(r.value - 0.2149875, -1e-9);
  EXPECT_LE(r.value - 0.2149875, 1e-3);
}

TEST(Genuine, ReferenceStates) {
  const auto p = MeasureParams::qs(2, 1);
  EXPECT_NEAR(genuine_measure_pure(ghz(3), p).value, 0.5, 1e-14);
  EXPECT_NEAR(genuine_measure_pure(w3(), p).value, 4.0 / 9.0, 1e-14);
  EXPECT_NEAR(genuine_concurrence(ghz(3)).value, 1.0, 1e-14);
  EXPECT_NEAR(genuine_concurrence(w3()).value, std::sqrt(8.0) / 3.0, 1e-14);
  EXPECT_EQ(genuine_measure_pure(ghz(3), p).minimizer, Partition::parse("A|BC"));
}

TEST(Genuine, BiseparableIsZero) {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const PureState psi = tensor(PureState(v, {2, 2}), PureState::basis({2}, {0}));
  const GenuineValue g = genuine_measure_pure(psi, MeasureParams::rt(0.5, 1));
  EXPECT_EQ(g.value, 0.0);
  EXPECT_EQ(g.minimizer, Partition::parse("AB|C"));
}

TEST(Genuine, LowerBoundsOnGhz) {
  const auto b = genuine_lower_bounds(ghz(3), MeasureParams::qs(2, 1));
  EXPECT_NEAR(b.bipartition_sum, 0.5, 1e-10);
  EXPECT_NEAR(b.global_sum, 0.5, 1e-10);
}

TEST(Genuine, LowerBoundsHoldForThreeParties) {
  Rng rng({54, 0});
  for (int i = 0; i < 50; ++i) {
    const PureState psi = sample_haar_pure(i % 2 ? Dims{3, 3, 3} : Dims{2, 2, 2}, rng);
    for (auto p : {MeasureParams::qs(2, 1), MeasureParams::qs(2, 2), MeasureParams::rt(0.5, 1)}) {
      const double gem = genuine_measure_pure(psi, p).value;
      const auto b = genuine_lower_bounds(psi, p);
      EXPECT_LE(b.bipartition_sum, gem + 1e-10);
      EXPECT_LE(b.global_sum, gem + 1e-10);
    }
  }
}

TEST(Genuine, ExtremalConstant) {
  EXPECT_NEAR(extremal_constant(2, MeasureParams::qs(2, 1)), 0.5, 1e-15);
  EXPECT_NEAR(extremal_constant(3, MeasureParams::qs(2, 2)), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(extremal_constant(2, MeasureParams::rt(0.5, 1)), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(genuine_lower_bounds(sample_haar_pure({2, 3, 2}, RngConfig{1, 0}), MeasureParams::qs(2, 1)),
               DomainError);
}

TEST(Monogamy, CompleteScanOnAProductWithTheResidualBlock) {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const PureState psi = tensor(PureState(v, {2, 2}), PureState::basis({2}, {0}));
  const auto scan =
      complete_monogamy_scan(psi, Partition::parse("A|B|C"), Partition::parse("A|B", 3), kSumQS21, {});
  EXPECT_NEAR(scan.equality_gap, 0.0, 1e-12);
  EXPECT_FALSE(scan.residual_set.empty());
  EXPECT_LT(scan.residual_max, 1e-9);
}

TEST(Monogamy, MeasureOnPartitionUsesTheMarginal) {
  const auto v = measure_on_partition(ghz(3), Partition::parse("A|B", 3), kSumQS21, {});
  EXPECT_FALSE(v.exact);
  EXPECT_LT(v.value, 1e-9);
  const auto full = measure_on_partition(ghz(3), Partition::parse("A|B|C"), kSumQS21, {});
  EXPECT_TRUE(full.exact);
  EXPECT_NEAR(full.value, 0.75, 1e-14);
}
