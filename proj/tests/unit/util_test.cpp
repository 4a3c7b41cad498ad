#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "emolex/util/csv.hpp"
#include "emolex/util/error.hpp"
#include "emolex/util/rng.hpp"
#include "emolex/util/time.hpp"

namespace emolex {
namespace {

TEST(Csv, EscapesOnlyWhenNeeded) {
  EXPECT_EQ(csv::escape("plain"), "plain");
  EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv::escape("two\nlines"), "\"two\nlines\"");
}

TEST(Csv, RowRoundTripWithQuotesAndNewlines) {
  const std::vector<std::string> row{"x", "a,b", "q\"q", "multi\nline", ""};
  std::stringstream s;
  csv::write_row(s, row);
  csv::write_row(s, {"next"});
  const auto back = csv::read_row(s);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, row);
  EXPECT_EQ(csv::read_row(s)->at(0), "next");
  EXPECT_FALSE(csv::read_row(s));
}

TEST(Csv, SplitAndJoin) {
  EXPECT_TRUE(csv::split("", ';').empty());
  EXPECT_EQ(csv::split("a;b;;c", ';'), (std::vector<std::string>{"a", "b", "", "c"}));
  EXPECT_EQ(csv::join({"a", "b"}, ';'), "a;b");
}

TEST(Csv, FormatRealHasNoNegativeZero) {
  EXPECT_EQ(csv::format_real(0.5, 4), "0.5000");
  EXPECT_EQ(csv::format_real(-1e-12, 3), "0.000");
  EXPECT_EQ(csv::format_real(-0.25, 2), "-0.25");
}

TEST(Time, ParseFormatRoundTrip) {
  const auto ts = parse_timestamp("2019-03-29T23:59:58Z");
  EXPECT_EQ(format_timestamp(ts), "2019-03-29T23:59:58Z");
}

TEST(Time, RejectsMalformedStamps) {
  EXPECT_THROW(parse_timestamp("2019-03-29 23:59:58"), InvalidArgumentError);
  EXPECT_THROW(parse_timestamp("2019-02-30T00:00:00Z"), InvalidArgumentError);
  EXPECT_THROW(parse_timestamp("2019-03-29T24:00:00Z"), InvalidArgumentError);
  EXPECT_THROW(parse_timestamp(""), InvalidArgumentError);
}

TEST(Time, SteppingClockAdvances) {
  auto clock = stepping_clock(parse_timestamp("2019-01-01T00:00:00Z"), std::chrono::seconds(5));
  EXPECT_EQ(format_timestamp(clock()), "2019-01-01T00:00:00Z");
  EXPECT_EQ(format_timestamp(clock()), "2019-01-01T00:00:05Z");
}

TEST(Rng, UniformBelowStaysInRange) {
  auto rng = seeded_rng(3, "range");
  for (int i = 0; i < 10000; ++i) EXPECT_LT(uniform_below(rng, 7), 7u);
}

TEST(Rng, SameSeedSameShuffle) {
  std::vector<int> a(50), b(50);
  std::iota(a.begin(), a.end(), 0);
  b = a;
  auto r1 = seeded_rng(9, "s");
  auto r2 = seeded_rng(9, "s");
  stable_shuffle(a.begin(), a.end(), r1);
  stable_shuffle(b.begin(), b.end(), r2);
  EXPECT_EQ(a, b);
  std::sort(a.begin(), a.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a[static_cast<std::size_t>(i)], i);
}

TEST(Rng, SaltSeparatesStreams) {
  auto r1 = seeded_rng(9, "a");
  auto r2 = seeded_rng(9, "b");
  EXPECT_NE(r1(), r2());
}

TEST(Rng, StableHashIsFnv1a) {
  EXPECT_EQ(stable_hash(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(stable_hash("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace emolex
