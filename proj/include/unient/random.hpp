#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "unient/state.hpp"

namespace unient {

/// Name recorded in run metadata so other implementations can regenerate a corpus.
inline constexpr std::string_view kRngAlgorithm = "philox4x32-10";

/// Seeding for the counter-based generator.
///
/// The Philox key is the 64-bit seed (low word first); the 128-bit counter is
/// (draw index low, draw index high, stream low, stream high). Each block yields
/// four 32-bit words consumed in order.
struct RngConfig {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Independent sub-stream k: same seed, stream = splitmix64(stream ^ splitmix64(k + 1)).
  RngConfig child(std::uint64_t k) const;

  friend bool operator==(const RngConfig&, const RngConfig&) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Raw Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

class Rng {
 public:
  explicit Rng(RngConfig config);

  std::uint32_t next_u32();
  /// High word first: (next_u32() << 32) | next_u32().
  std::uint64_t next_u64();
  /// 53-bit uniform in [0, 1).
  double uniform();
  /// Standard normal via Box-Muller; both variates of a pair are used.
  double normal();
  /// Real and imaginary parts independent standard normals.
  cplx complex_normal();

 private:
  RngConfig config_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

PureState sample_haar_pure(const Dims& dims, Rng& rng);
PureState sample_haar_pure(const Dims& dims, RngConfig config);

/// Normalized G G^dagger with G a dim x rank complex Gaussian matrix; rank <= dim.
DensityMatrix sample_ginibre_density(const Dims& dims, std::size_t rank, Rng& rng);
DensityMatrix sample_ginibre_density(std::size_t dim, std::size_t rank, RngConfig config);
DensityMatrix sample_ginibre_density(const Dims& dims, std::size_t rank, RngConfig config);

/// Haar-distributed unitary (QR of a Ginibre matrix with the phase correction).
Matrix sample_haar_unitary(std::size_t dim, Rng& rng);

}  // namespace unient
