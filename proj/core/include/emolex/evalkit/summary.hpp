#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emolex/lexicon/lexicon.hpp"

namespace emolex::evalkit {

struct SummaryShare {
  Subclass subclass = Subclass::none;
  std::uint32_t count = 0;
  std::uint32_t hundredths = 0;  // percentage * 100
};

/// Non-zero subclasses in non-increasing count order (ties by subclass index)
/// with percentages in hundredths. Shares are rounded to the nearest 0.01 and
/// any remaining 0.01 units go to the largest remainders, so they always
/// total exactly 100.
std::vector<SummaryShare> summary_shares(const SubclassCounts& counts);

/// "50.0", "33.33", "100.0": two decimals, trailing zeros trimmed to one.
std::string format_percentage(std::uint32_t hundredths);

/// `The term group "<terms>" received annotations as 50.0% sadness, 33.33% disgust, 16.67% anger.`
/// Throws InvalidArgumentError when the counts are all zero.
std::string render_summary(std::span<const std::string> terms, const SubclassCounts& counts);
std::string render_summary(const lexicon::LexiconEntry& entry);

}  // namespace emolex::evalkit
