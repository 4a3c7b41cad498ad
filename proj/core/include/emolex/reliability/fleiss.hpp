#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "emolex/lexicon/lexicon.hpp"

namespace emolex::reliability {

/// One row per item, one column per category; every row must sum to the
/// same rater count n >= 2.
using RatingMatrix = std::vector<std::vector<std::uint32_t>>;

/// Fleiss' kappa: (P - Pe) / (1 - Pe) with P the mean per-item pairwise
/// agreement and Pe the sum of squared category proportions.
///
/// Throws InvalidArgumentError on empty input, ragged rows, n < 2 or unequal
/// n. When Pe == 1 every rating falls in one category, so kappa is 1.
double fleiss_kappa(const RatingMatrix& items);

inline constexpr std::size_t kMinStratum = 2;
inline constexpr std::size_t kMaxStratum = 6;

struct KappaReport {
  std::size_t total_annotations = 0;
  std::optional<double> subclass_k;  // 11 categories, items with this total
  std::size_t items = 0;
  /// 8 categories over emotion annotations only, items whose emotion-only
  /// count equals `total_annotations`.
  std::optional<double> emotional_k;
  std::size_t emotional_items = 0;
};

struct KappaByStratum {
  std::vector<KappaReport> reports;             // strata 2..6 with at least one item
  std::vector<std::string> notices;             // omitted strata
  std::map<std::uint64_t, std::size_t> outside; // totals outside 2..6 -> item count
};

KappaByStratum kappa_by_stratum(std::span<const lexicon::LexiconEntry> entries);

/// CSV {total_annotations, subclass_k, emotional_k, items, emotional_items,
/// emotional_basis}; kappa printed with 6 decimals, empty when undefined.
void write_kappa_report(std::ostream& out, const KappaByStratum& report);

}  // namespace emolex::reliability
