#include <gtest/gtest.h>

#include <cmath>

#include "emolex/corpus/zipf.hpp"
#include "emolex/util/error.hpp"

namespace emolex::corpus {
namespace {

TEST(Zipf, ExactInverseRankRecoversExponentOne) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t r = 1; r <= 1000; ++r) f.push_back(std::llround(1e6 / static_cast<double>(r)));
  const auto fit = zipf_fit(f);
  EXPECT_NEAR(fit.exponent, 1.0, 1e-3);
  EXPECT_GT(fit.r_squared, 0.999);
}

TEST(Zipf, InputOrderDoesNotMatter) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t r = 1; r <= 50; ++r) f.push_back(std::llround(1e5 / std::pow(static_cast<double>(r), 2.0)));
  std::vector<std::uint64_t> reversed(f.rbegin(), f.rend());
  EXPECT_NEAR(zipf_fit(f).exponent, 2.0, 0.01);
  EXPECT_DOUBLE_EQ(zipf_fit(f).exponent, zipf_fit(reversed).exponent);
}

TEST(Zipf, NeedsTenTerms) {
  const std::vector<std::uint64_t> f{9, 8, 7, 6, 5, 4, 3, 2, 1};
  EXPECT_THROW(zipf_fit(f), InsufficientDataError);
}

}  // namespace
}  // namespace emolex::corpus
