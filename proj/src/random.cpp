#include "unient/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "unient/errors.hpp"

namespace unient {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngConfig RngConfig::child(std::uint64_t k) const { return {seed, splitmix64(stream ^ splitmix64(k + 1))}; }

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
  constexpr std::uint64_t kMul0 = 0xD2511F53;
  constexpr std::uint64_t kMul1 = 0xCD9E8D57;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    const std::uint64_t p0 = kMul0 * ctr[0];
    const std::uint64_t p1 = kMul1 * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

Rng::Rng(RngConfig config) : config_(config) {}

std::uint32_t Rng::next_u32() {
  if (used_ == 4) {
    buffer_ = philox4x32_10(
        {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
         static_cast<std::uint32_t>(config_.stream), static_cast<std::uint32_t>(config_.stream >> 32)},
        {static_cast<std::uint32_t>(config_.seed), static_cast<std::uint32_t>(config_.seed >> 32)});
    ++block_;
    used_ = 0;
  }
  return buffer_[used_++];
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

cplx Rng::complex_normal() {
  const double re = normal();
  return {re, normal()};
}

PureState sample_haar_pure(const Dims& dims, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(total_dimension(dims));
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return PureState::normalized(std::move(v), dims);
}

PureState sample_haar_pure(const Dims& dims, RngConfig config) {
  Rng rng(config);
  return sample_haar_pure(dims, rng);
}

DensityMatrix sample_ginibre_density(const Dims& dims, std::size_t rank, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(total_dimension(dims));
  if (rank == 0 || rank > static_cast<std::size_t>(d))
    throw DomainError("ginibre rank must lie in [1, dim]");
  Matrix g(d, static_cast<Eigen::Index>(rank));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho), dims);
}

DensityMatrix sample_ginibre_density(std::size_t dim, std::size_t rank, RngConfig config) {
  return sample_ginibre_density(Dims{dim}, rank, config);
}

DensityMatrix sample_ginibre_density(const Dims& dims, std::size_t rank, RngConfig config) {
  Rng rng(config);
  return sample_ginibre_density(dims, rank, rng);
}

Matrix sample_haar_unitary(std::size_t dim, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix g(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const cplx diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

}  // namespace unient
