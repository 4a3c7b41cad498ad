#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "emolex/model/subclass.hpp"

namespace emolex::lexicon {

struct AgreementAnalysis {
  /// The 11 counts sorted non-decreasingly (a_1 <= ... <= a_11).
  std::array<std::uint32_t, kSubclassCount> sorted{};
  /// Subclasses whose count equals the maximum, in subclass index order.
  std::vector<Subclass> tied_max;
  /// At least two subclasses share a non-zero maximum.
  bool subclass_agreement = false;
  /// Subclass agreement where every tied subclass is an emotion.
  bool emotional_agreement = false;

  std::uint32_t max_count() const noexcept { return sorted.back(); }
};

/// Throws InvalidArgumentError when all counts are zero.
AgreementAnalysis analyze_agreement(const SubclassCounts& counts);

}  // namespace emolex::lexicon
