#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unient/errors.hpp"
#include "unient/random.hpp"
#include "unient/state.hpp"

using namespace unient;

TEST(Philox, KnownAnswers) {
  using W = std::array<std::uint32_t, 4>;
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (W{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (W{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (W{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, StreamLayout) {
  Rng rng({0x0000000200000001ull, 0x0000000400000003ull});
  const auto block0 = philox4x32_10({0, 0, 3, 4}, {1, 2});
  const auto block1 = philox4x32_10({1, 0, 3, 4}, {1, 2});
  for (auto w : block0) EXPECT_EQ(rng.next_u32(), w);
  EXPECT_EQ(rng.next_u32(), block1[0]);
}

TEST(Rng, DeterministicAndIndependentChildren) {
  const RngConfig cfg{42, 7};
  Rng a(cfg), b(cfg), c(cfg.child(0)), d(cfg.child(1));
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_NE(c.next_u64(), d.next_u64());
  EXPECT_EQ(cfg.child(3), cfg.child(3));
  EXPECT_EQ(cfg.child(3).seed, cfg.seed);
}

TEST(Rng, UniformAndNormalMoments) {
  Rng rng({1, 0});
  double su = 0, sn = 0, sn2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  EXPECT_NEAR(su / n, 0.5, 5e-3);
  EXPECT_NEAR(sn / n, 0.0, 1e-2);
  EXPECT_NEAR(sn2 / n, 1.0, 1e-2);
}

TEST(Sampling, HaarStateAndGinibreDensity) {
  Rng rng({3, 0});
  const PureState psi = sample_haar_pure({2, 3}, rng);
  EXPECT_NEAR(psi.amplitudes().norm(), 1.0, 1e-12);
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    const DensityMatrix rho = sample_ginibre_density({2, 2}, rank, rng);
    EXPECT_EQ(rho.rank(), rank);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
  }
  const Matrix u = sample_haar_unitary(4, rng);
  EXPECT_LT((u.adjoint() * u - Matrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(State, ConstructorsValidate) {
  Vector v(4);
  v << 1, 0, 0, 1;
  EXPECT_THROW(PureState(v, {2, 2}), DomainError);
  EXPECT_THROW(PureState(v / std::sqrt(2.0), {2, 3}), DomainError);
  EXPECT_NO_THROW(PureState::normalized(v, {2, 2}));
  EXPECT_THROW(PureState::normalized(Vector::Zero(4), {2, 2}), DomainError);

  Matrix m = Matrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(m, {2}), DomainError);
  EXPECT_THROW(DensityMatrix::diagonal({1.2, -0.2}, {2}), DomainError);
  EXPECT_THROW(DensityMatrix::diagonal({0.6, 0.6}, {2}), DomainError);
}

TEST(State, TinyNegativeEigenvaluesAreClamped) {
  const DensityMatrix rho = DensityMatrix::diagonal({1.0 + 5e-10, -5e-10}, {2});
  EXPECT_GE(rho.spectrum().eigenvalues.minCoeff(), 0.0);
  EXPECT_NEAR(rho.spectrum().eigenvalues.sum(), 1.0, 1e-15);
  EXPECT_TRUE(rho.is_pure());
}

TEST(State, PartialTraceMatchesExplicitSummation) {
  Rng rng({11, 0});
  const Dims dims{2, 3, 2};
  const PureState psi = sample_haar_pure(dims, rng);
  for (const std::vector<std::size_t>& keep : {std::vector<std::size_t>{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1}}) {
    const Matrix expected = oracle::reduced(psi.amplitudes(), dims, keep);
    EXPECT_LT((partial_trace(psi, keep).matrix() - expected).norm(), 1e-12);
    EXPECT_LT((partial_trace(psi.density(), keep).matrix() - expected).norm(), 1e-12);
  }
}

TEST(State, SchmidtWeightsAreReducedEigenvalues) {
  Rng rng({12, 0});
  for (int i = 0; i < 20; ++i) {
    const PureState psi = sample_haar_pure({3, 2, 2}, rng);
    const Partition cut = Partition::parse("AC|B");
    const RealVector s = schmidt_coefficients(psi, cut);
    auto ev = oracle::eigenvalues(oracle::reduced(psi.amplitudes(), {3, 2, 2}, {1}));
    std::sort(ev.rbegin(), ev.rend());
    ASSERT_EQ(static_cast<std::size_t>(s.size()), 2u);
    for (Eigen::Index k = 0; k < s.size(); ++k) EXPECT_NEAR(s(k) * s(k), ev[static_cast<std::size_t>(k)], 1e-9);
  }
}

TEST(State, PowersAndTracePowers) {
  const DensityMatrix rho = DensityMatrix::diagonal({0.5, 0.5, 0.0}, {3});
  EXPECT_NEAR(trace_power(rho, 2.0), 0.5, 1e-15);
  EXPECT_NEAR(trace_power(rho, 0.5), std::sqrt(2.0), 1e-14);
  const Matrix inv = matrix_power(rho, -1.0);
  EXPECT_NEAR(inv(0, 0).real(), 2.0, 1e-12);
  EXPECT_EQ(inv(2, 2), cplx(0.0));

  Rng rng({13, 0});
  const PureState psi = sample_haar_pure({2, 2}, rng);
  EXPECT_EQ(trace_power(psi.density(), 2.0), 1.0);
  EXPECT_EQ(trace_power(psi.density(), 0.3), 1.0);
  const DensityMatrix mixed = sample_ginibre_density({2, 2}, 3, rng);
  EXPECT_LT(trace_power(mixed, 2.0), 1.0);
  EXPECT_GT(trace_power(mixed, 0.5), 1.0);
}

TEST(State, TensorAndKron) {
  const PureState a = PureState::basis({2}, {1});
  const PureState b = PureState::basis({3}, {2});
  const PureState ab = tensor(a, b);
  EXPECT_EQ(ab.dims(), (Dims{2, 3}));
  EXPECT_EQ(ab.amplitudes()(5), cplx(1.0));
  const DensityMatrix m = tensor(DensityMatrix::maximally_mixed({2}), DensityMatrix::maximally_mixed({2}));
  EXPECT_LT((m.matrix() - Matrix::Identity(4, 4) / 4.0).norm(), 1e-15);
}
