#include "unient/partition.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "unient/errors.hpp"

namespace unient {

namespace {

void canonicalize(std::vector<Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
}

bool subset_of(const Block& small, const Block& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Block intersect(const Block& x, const Block& y) {
  Block out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool contains_block(const Partition& p, const Block& b) {
  return std::find(p.blocks().begin(), p.blocks().end(), b) != p.blocks().end();
}

// Restricted-growth enumeration of the set partitions of `items`.
template <typename Visit>
void for_each_set_partition(const Block& items, Visit&& visit) {
  const std::size_t n = items.size();
  if (n == 0) return;
  std::vector<std::size_t> label(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    std::size_t k = prefix_max[n - 1] + 1;
    std::vector<Block> blocks(k);
    for (std::size_t i = 0; i < n; ++i) blocks[label[i]].push_back(items[i]);
    visit(std::move(blocks));

    // advance to the next restricted-growth string
    std::size_t i = n - 1;
    while (i > 0 && label[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace

Partition::Partition(std::vector<Block> blocks, std::size_t universe)
    : blocks_(std::move(blocks)), universe_(universe) {
  if (blocks_.empty()) throw DomainError("partition needs at least one block");
  std::vector<bool> seen(universe_, false);
  for (const auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition blocks must be nonempty");
    for (auto idx : b) {
      if (idx >= universe_) throw DomainError("party index out of range");
      if (seen[idx]) throw DomainError("partition blocks must be disjoint");
      seen[idx] = true;
    }
  }
  canonicalize(blocks_);
}

Partition Partition::parse(std::string_view text, std::optional<std::size_t> universe) {
  std::vector<Block> blocks(1);
  std::size_t max_index = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '|') {
      blocks.emplace_back();
      continue;
    }
    if (ch < 'A' || ch > 'Z') throw ParseError(std::string("unexpected character in partition: '") + ch + "'");
    auto idx = static_cast<std::size_t>(ch - 'A');
    blocks.back().push_back(idx);
    max_index = std::max(max_index, idx);
  }
  for (const auto& b : blocks)
    if (b.empty()) throw ParseError("empty block in partition \"" + std::string(text) + "\"");
  std::size_t n = universe.value_or(max_index + 1);
  if (max_index >= n) throw DomainError("partition uses a party outside the universe");
  try {
    return Partition(std::move(blocks), n);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid partition \"") + std::string(text) + "\": " + e.what());
  }
}

Partition Partition::bipartition(std::vector<std::size_t> first, std::size_t universe) {
  std::sort(first.begin(), first.end());
  Block rest;
  for (std::size_t i = 0; i < universe; ++i)
    if (!std::binary_search(first.begin(), first.end(), i)) rest.push_back(i);
  if (first.empty() || rest.empty()) throw DomainError("bipartition blocks must both be nonempty");
  return Partition({std::move(first), std::move(rest)}, universe);
}

Partition Partition::finest(std::size_t universe) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < universe; ++i) blocks.push_back({i});
  return Partition(std::move(blocks), universe);
}

Block Partition::support() const {
  Block out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Partition::covers_universe() const {
  std::size_t count = 0;
  for (const auto& b : blocks_) count += b.size();
  return count == universe_;
}

std::string Partition::to_string() const {
  const bool letters = universe_ <= 26;
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (letters) {
        out += static_cast<char>('A' + blocks_[i][j]);
      } else {
        if (j) out += ',';
        out += std::to_string(blocks_[i][j]);
      }
    }
  }
  return out;
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) throw DomainError("enumerate_partitions requires 2 <= k <= n");
  Block items(n);
  for (std::size_t i = 0; i < n; ++i) items[i] = i;
  std::vector<Partition> out;
  for_each_set_partition(items, [&](std::vector<Block> blocks) {
    if (blocks.size() == k) out.emplace_back(std::move(blocks), n);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(const Block& parties, std::size_t universe, std::size_t min_blocks) {
  std::vector<Partition> out;
  for_each_set_partition(parties, [&](std::vector<Block> blocks) {
    if (blocks.size() >= min_blocks) out.emplace_back(std::move(blocks), universe);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool coarser_a(const Partition& finer, const Partition& coarser) {
  if (finer.universe() != coarser.universe() || coarser.size() >= finer.size()) return false;
  return std::all_of(coarser.blocks().begin(), coarser.blocks().end(),
                     [&](const Block& b) { return contains_block(finer, b); });
}

bool coarser_b(const Partition& finer, const Partition& coarser) {
  if (finer.universe() != coarser.universe() || coarser.size() >= finer.size()) return false;
  if (finer.support() != coarser.support()) return false;
  return std::all_of(finer.blocks().begin(), finer.blocks().end(), [&](const Block& x) {
    return std::any_of(coarser.blocks().begin(), coarser.blocks().end(),
                       [&](const Block& y) { return subset_of(x, y); });
  });
}

bool coarser_c(const Partition& finer, const Partition& coarser) {
  if (finer.universe() != coarser.universe() || coarser.size() != finer.size() || finer == coarser) return false;
  std::vector<bool> used(finer.size(), false);
  for (const auto& y : coarser.blocks()) {
    bool placed = false;
    for (std::size_t i = 0; i < finer.size(); ++i) {
      if (!used[i] && subset_of(y, finer.blocks()[i])) {
        used[i] = true;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

bool is_coarser(const Partition& finer, const Partition& coarser) {
  if (finer.universe() != coarser.universe() || finer == coarser) return false;
  const Block target = coarser.support();
  if (!subset_of(target, finer.support())) return false;
  for (const auto& x : finer.blocks()) {
    Block kept = intersect(x, target);
    if (kept.empty()) continue;
    bool inside_one = std::any_of(coarser.blocks().begin(), coarser.blocks().end(),
                                  [&](const Block& y) { return subset_of(kept, y); });
    if (!inside_one) return false;
  }
  return true;
}

namespace {

// All partitions with at least two blocks that `p` can reach, including p itself.
std::vector<Partition> reachable_from(const Partition& p, bool include_self) {
  const Block parties = p.support();
  std::set<Partition> out;
  if (include_self) out.insert(p);
  const std::size_t n = parties.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Block subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(parties[i]);
    if (subset.size() < 2) continue;
    for (auto& cand : partitions_of(subset, p.universe(), 2))
      if (is_coarser(p, cand)) out.insert(std::move(cand));
  }
  return {out.begin(), out.end()};
}

// Index of the single fused block when `coarser` keeps blocks of `finer` and fuses all
// the others into one; nullopt otherwise.
std::optional<std::size_t> tail_merge_block(const Partition& finer, const Partition& coarser) {
  if (!coarser_b(finer, coarser)) return std::nullopt;
  std::optional<std::size_t> fused;
  for (std::size_t i = 0; i < coarser.size(); ++i) {
    if (contains_block(finer, coarser.blocks()[i])) continue;
    if (fused) return std::nullopt;
    fused = i;
  }
  return fused;
}

}  // namespace

std::vector<Partition> xi_set(const Partition& finer, const Partition& coarser) {
  if (!is_coarser(finer, coarser))
    throw DomainError("xi_set requires " + coarser.to_string() + " to be coarser than " + finer.to_string());

  if (auto fused = tail_merge_block(finer, coarser)) {
    const Block& merged = coarser.blocks()[*fused];
    std::vector<Block> pieces;
    for (const auto& x : finer.blocks())
      if (subset_of(x, merged)) pieces.push_back(x);
    return reachable_from(Partition(std::move(pieces), finer.universe()), true);
  }

  if (!coarser_a(finer, coarser))
    throw XiUndefinedError("no residual-set rule covers the step " + finer.to_string() + " -> " +
                           coarser.to_string());

  std::vector<Partition> out;
  for (auto& cand : reachable_from(finer, false)) {
    if (cand == coarser || is_coarser(cand, coarser) || is_coarser(coarser, cand)) continue;
    const Block cand_support = cand.support();
    Block touched;
    std::size_t touched_count = 0;
    for (const auto& y : coarser.blocks()) {
      if (intersect(y, cand_support).empty()) continue;
      ++touched_count;
      touched.insert(touched.end(), y.begin(), y.end());
    }
    if (touched_count >= 2) {
      Partition merged({touched}, finer.universe());
      if (cand == merged || is_coarser(cand, merged)) continue;
    }
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace unient
