#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emolex/evalkit/records.hpp"
#include "emolex/lexicon/lexicon.hpp"

namespace emolex::evalkit {

inline constexpr std::size_t kDefaultPerStratum = 200;
inline const std::vector<std::uint64_t> kDefaultStrata{2, 3, 4, 5, 6};

/// Seeded sample without replacement of `per_stratum` groups for each total
/// annotation count in `strata`. Output is grouped by stratum in the given
/// order. Throws InsufficientDataError naming the first short stratum.
std::vector<std::string> sample_validity_set(std::span<const lexicon::LexiconEntry> entries, std::uint64_t seed,
                                             std::size_t per_stratum = kDefaultPerStratum,
                                             std::span<const std::uint64_t> strata = kDefaultStrata);

/// Every group with at least one amplifying or weakening annotation, by stem.
std::vector<std::string> sample_intensifier_set(std::span<const lexicon::LexiconEntry> entries);

/// Evaluation tasks carrying the rendered summary of each listed group.
std::vector<EvaluationTask> make_evaluation_tasks(std::span<const lexicon::LexiconEntry> entries,
                                                  std::span<const std::string> group_ids, EvaluationKind kind);

}  // namespace emolex::evalkit
