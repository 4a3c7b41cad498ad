#include <gtest/gtest.h>

#include <fstream>

#include "emolex/lexicon/dyads.hpp"
#include "emolex/util/error.hpp"
#include "test_support.hpp"

namespace emolex::lexicon {
namespace {

using S = Subclass;

TEST(Dyads, NamedCombinations) {
  const std::vector<std::tuple<S, S, std::string>> named{
      {S::trust, S::joy, "love"},
      {S::joy, S::anticipation, "optimism"},
      {S::surprise, S::joy, "delight"},
      {S::fear, S::joy, "guilt"},
  };
  for (const auto& [a, b, name] : named) {
    const auto d = dyad_label(a, b);
    EXPECT_EQ(d.kind, DyadKind::combination);
    EXPECT_EQ(d.name, name);
  }
}

TEST(Dyads, Oppositions) {
  const std::vector<std::pair<S, S>> opposite{
      {S::sadness, S::joy}, {S::anger, S::fear}, {S::surprise, S::anticipation}, {S::disgust, S::trust}};
  for (const auto& [a, b] : opposite) {
    const auto d = dyad_label(a, b);
    EXPECT_EQ(d.kind, DyadKind::opposition);
    EXPECT_FALSE(d.name.has_value());
    EXPECT_TRUE(DyadTable::is_opposition(b, a));
  }
}

TEST(Dyads, SymmetricOverAllPairsWithFourOppositions) {
  int pairs = 0, oppositions = 0, named = 0;
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    for (std::size_t j = i + 1; j < kEmotionCount; ++j) {
      const auto ab = dyad_label(kEmotions[i], kEmotions[j]);
      EXPECT_EQ(ab, dyad_label(kEmotions[j], kEmotions[i]));
      EXPECT_EQ(ab.first, kEmotions[i]);
      ++pairs;
      oppositions += ab.kind == DyadKind::opposition;
      named += ab.name.has_value();
    }
  }
  EXPECT_EQ(pairs, 28);
  EXPECT_EQ(oppositions, 4);
  EXPECT_EQ(named, 4);
}

TEST(Dyads, UnnamedCombinationAndErrors) {
  const auto d = dyad_label(S::fear, S::disgust);
  EXPECT_EQ(d.kind, DyadKind::combination);
  EXPECT_FALSE(d.name);
  EXPECT_THROW(dyad_label(S::joy, S::joy), InvalidArgumentError);
  EXPECT_THROW(dyad_label(S::joy, S::none), InvalidArgumentError);
  EXPECT_THROW(dyad_label(S::amplifying, S::fear), InvalidArgumentError);
}

TEST(Dyads, NameTableExtendsDefaults) {
  test::TempDir dir("dyads");
  std::ofstream(dir / "names.json") << R"([{"pair": ["trust", "fear"], "name": "submission"}])";
  const auto table = DyadTable::load(dir / "names.json");
  EXPECT_EQ(table.label(S::fear, S::trust).name, "submission");
  EXPECT_EQ(table.label(S::joy, S::trust).name, "love");
  EXPECT_THROW(DyadTable::parse(R"([{"pair": ["joy", "sadness"], "name": "x"}])"), ConfigError);
  EXPECT_THROW(DyadTable::parse(R"([{"pair": ["joy"], "name": "x"}])"), ConfigError);
  EXPECT_THROW(DyadTable::parse("{"), ConfigError);
  EXPECT_THROW(DyadTable::load(dir / "missing.json"), ConfigError);
}

}  // namespace
}  // namespace emolex::lexicon
