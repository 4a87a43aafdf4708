#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "unient/errors.hpp"
#include "unient/partition.hpp"

using namespace unient;

namespace {

std::set<std::string> names(const std::vector<Partition>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST(Partition, CanonicalFormMakesEqualityStructural) {
  const Partition a({{2, 1}, {0}}, 3);
  const Partition b = Partition::parse("A|CB");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), "A|BC");
  EXPECT_TRUE(a.covers_universe());
}

TEST(Partition, ParseRoundTrip) {
  for (const char* text : {"A|B", "AC|B|D", "ABCD", "B|D"}) {
    const Partition p = Partition::parse(text, 4);
    EXPECT_EQ(Partition::parse(p.to_string(), 4), p) << text;
  }
  EXPECT_FALSE(Partition::parse("B|D", 4).covers_universe());
  EXPECT_EQ(Partition::parse("B|D", 4).support(), (Block{1, 3}));
}

TEST(Partition, RejectsMalformedText) {
  EXPECT_THROW(Partition::parse("A||B"), ParseError);
  EXPECT_THROW(Partition::parse("A|a"), ParseError);
  EXPECT_THROW(Partition::parse(""), ParseError);
}

TEST(Partition, RejectsOverlapAndOutOfRange) {
  EXPECT_THROW(Partition({{0, 1}, {1}}, 2), DomainError);
  EXPECT_THROW(Partition({{0}, {3}}, 3), DomainError);
  EXPECT_THROW(Partition({{0}, {}}, 3), DomainError);
}

TEST(Partition, EnumerationMatchesStirlingNumbers) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 2; k <= n; ++k) {
      const auto ps = enumerate_partitions(n, k);
      EXPECT_EQ(ps.size(), oracle::stirling2_bruteforce(n, k)) << n << "," << k;
      EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
      EXPECT_EQ(names(ps).size(), ps.size());
      for (const auto& p : ps) {
        EXPECT_EQ(p.size(), k);
        EXPECT_TRUE(p.covers_universe());
      }
    }
}

TEST(Partition, ThreePartyBipartitions) {
  EXPECT_EQ(names(enumerate_partitions(3, 2)), (std::set<std::string>{"A|BC", "AB|C", "AC|B"}));
}

TEST(Partition, CoarseningMoves) {
  const auto P = [](const char* s) { return Partition::parse(s, 4); };
  EXPECT_TRUE(coarser_c(P("A|BC"), P("A|B")));
  EXPECT_FALSE(coarser_a(P("A|BC"), P("A|B")));
  EXPECT_TRUE(coarser_a(P("A|B|C"), P("A|B")));
  EXPECT_TRUE(coarser_b(P("A|B|C|D"), P("A|BCD")));
  EXPECT_FALSE(coarser_b(P("A|B"), P("A|B")));
  EXPECT_TRUE(is_coarser(P("A|B|CD"), P("AB|C")));
  EXPECT_FALSE(is_coarser(P("AB|C"), P("A|B|C")));
}

TEST(Partition, ResidualSetOfTailMerge) {
  const auto xi = xi_set(Partition::parse("A|B|C|D"), Partition::parse("A|BCD"));
  EXPECT_EQ(names(xi), (std::set<std::string>{"B|C|D", "B|CD", "BC|D", "BD|C", "B|C", "C|D", "B|D"}));
}

TEST(Partition, ResidualSetOfDiscard) {
  const auto xi = xi_set(Partition::parse("A|B|C"), Partition::parse("A|B", 3));
  for (const auto& p : xi) {
    EXPECT_FALSE(is_coarser(Partition::parse("A|B", 3), p)) << p.to_string();
    EXPECT_NE(p, Partition::parse("A|B", 3));
  }
  EXPECT_TRUE(names(xi).count("A|C"));
  EXPECT_TRUE(names(xi).count("B|C"));
}

TEST(Partition, ResidualSetErrors) {
  EXPECT_THROW(xi_set(Partition::parse("A|BC"), Partition::parse("A|B|C")), DomainError);
  EXPECT_THROW(xi_set(Partition::parse("A|B|C|D"), Partition::parse("AB|CD")), XiUndefinedError);
}
