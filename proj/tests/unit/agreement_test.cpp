#include <gtest/gtest.h>

#include <algorithm>

#include "emolex/lexicon/agreement.hpp"
#include "emolex/util/error.hpp"

namespace emolex::lexicon {
namespace {

SubclassCounts counts(std::initializer_list<std::pair<Subclass, std::uint32_t>> values) {
  SubclassCounts c{};
  for (const auto& [s, n] : values) c[slot(s)] = n;
  return c;
}

TEST(Agreement, Examples) {
  auto a = analyze_agreement(counts({{Subclass::joy, 2}, {Subclass::none, 2}}));
  EXPECT_TRUE(a.subclass_agreement);
  EXPECT_FALSE(a.emotional_agreement);
  a = analyze_agreement(counts({{Subclass::joy, 3}, {Subclass::sadness, 3}}));
  EXPECT_TRUE(a.subclass_agreement);
  EXPECT_TRUE(a.emotional_agreement);
  EXPECT_EQ(a.tied_max, (std::vector<Subclass>{Subclass::joy, Subclass::sadness}));
  a = analyze_agreement(counts({{Subclass::joy, 4}, {Subclass::none, 1}}));
  EXPECT_FALSE(a.subclass_agreement);
  EXPECT_FALSE(a.emotional_agreement);
  EXPECT_EQ(a.max_count(), 4u);
}

TEST(Agreement, SortedSequenceIsNonDecreasing) {
  const auto a = analyze_agreement(counts({{Subclass::fear, 5}, {Subclass::joy, 1}, {Subclass::none, 3}}));
  EXPECT_TRUE(std::is_sorted(a.sorted.begin(), a.sorted.end()));
  EXPECT_EQ(a.sorted.front(), 0u);
  EXPECT_EQ(a.sorted.back(), 5u);
}

TEST(Agreement, AllZeroThrows) { EXPECT_THROW(analyze_agreement(SubclassCounts{}), InvalidArgumentError); }

// Naive max-scan written without sorting.
struct Oracle {
  std::vector<Subclass> tied;
  bool subclass = false;
  bool emotional = false;
};

Oracle oracle(const SubclassCounts& c) {
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < kSubclassCount; ++i) best = c[i] > best ? c[i] : best;
  Oracle o;
  for (std::size_t i = 0; i < kSubclassCount; ++i) {
    if (c[i] == best) o.tied.push_back(kAllSubclasses[i]);
  }
  o.subclass = best > 0 && o.tied.size() >= 2;
  o.emotional = o.subclass;
  for (auto s : o.tied) o.emotional = o.emotional && is_emotion(s);
  return o;
}

// Visits every vector of 11 non-negative counts with the given total.
template <typename Fn>
void compositions(std::uint32_t total, Fn&& fn) {
  SubclassCounts c{};
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == kSubclassCount) {
      c[i] = left;
      fn(c);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      c[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

TEST(Agreement, ExhaustiveOracleEquivalence) {
  std::size_t visited = 0, at_six = 0;
  for (std::uint32_t total = 1; total <= 6; ++total) {
    compositions(total, [&](const SubclassCounts& c) {
      ++visited;
      if (total == 6) ++at_six;
      const auto got = analyze_agreement(c);
      const auto want = oracle(c);
      ASSERT_EQ(got.tied_max, want.tied);
      ASSERT_EQ(got.subclass_agreement, want.subclass);
      ASSERT_EQ(got.emotional_agreement, want.emotional);
      ASSERT_TRUE(!got.emotional_agreement || got.subclass_agreement);
    });
  }
  EXPECT_EQ(at_six, 8008u);
  EXPECT_EQ(visited, 12375u);
}

}  // namespace
}  // namespace emolex::lexicon
