#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unient {

using Block = std::vector<std::size_t>;

/// A set of disjoint, nonempty blocks of party indices drawn from {0, ..., universe-1}.
///
/// The blocks need not cover the universe: a partition may describe a subsystem.
/// Values are always stored in canonical form (elements ascending within each
/// block, blocks ordered by their minimum element), so equality is structural.
class Partition {
 public:
  Partition(std::vector<Block> blocks, std::size_t universe);

  /// Parses "AC|B|D". Letters map to indices by alphabetical position. When
  /// `universe` is omitted it is one past the largest letter used.
  static Partition parse(std::string_view text, std::optional<std::size_t> universe = std::nullopt);

  /// Two-block cover {first} | rest, the default bipartition of an n-party system.
  static Partition bipartition(std::vector<std::size_t> first, std::size_t universe);

  /// Each party in its own block.
  static Partition finest(std::size_t universe);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t universe() const { return universe_; }
  std::size_t size() const { return blocks_.size(); }
  /// Union of all blocks, ascending.
  Block support() const;
  bool covers_universe() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::size_t universe_;
};

/// All k-block set partitions of {0..n-1}, canonical and sorted. Requires 2 <= k <= n.
std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t k);

/// All partitions (any number of blocks >= min_blocks) of the given party set.
std::vector<Partition> partitions_of(const Block& parties, std::size_t universe, std::size_t min_blocks = 1);

// Coarsening relations. Each returns true when `finer` can be turned into
// `coarser` by a nonempty sequence of the corresponding moves:
//   a: discard whole blocks
//   b: merge blocks
//   c: discard parties from inside blocks (every block stays nonempty)
// `is_coarser` allows any mixture of the three moves. None is reflexive.
bool coarser_a(const Partition& finer, const Partition& coarser);
bool coarser_b(const Partition& finer, const Partition& coarser);
bool coarser_c(const Partition& finer, const Partition& coarser);
bool is_coarser(const Partition& finer, const Partition& coarser);

/// Residual set of a coarsening step: the partitions whose entanglement must
/// vanish when a measure is unchanged by the step from `finer` to `coarser`.
///
/// Defined for two shapes of step:
///  - pure discards (coarser_a): every partition reachable from `finer` that is
///    neither reachable from `coarser` nor able to reach it; partitions touching
///    two or more blocks of `coarser` treat those blocks as a single subsystem
///    and are dropped when they can reach that merged subsystem.
///  - a single tail merge, where `coarser` keeps some blocks of `finer` and fuses
///    all remaining ones: the fused blocks as a partition, together with
///    everything reachable from it.
/// Any other step throws XiUndefinedError; a pair that is not a coarsening
/// throws DomainError.
std::vector<Partition> xi_set(const Partition& finer, const Partition& coarser);

}  // namespace unient
