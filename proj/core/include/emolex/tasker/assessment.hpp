#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/model/annotation.hpp"

namespace emolex::tasker {

struct AssessmentItem {
  std::string group_id;
  MainClass dominant_main_class = MainClass::none;

  friend bool operator==(const AssessmentItem&, const AssessmentItem&) = default;
};

/// Derives assessment items from operator-provided seed annotations. A group
/// qualifies when one main class holds a strict majority of its seed labels.
/// Qualifying groups are taken in group-id order; throws ConfigError when
/// fewer than `size` qualify.
std::vector<AssessmentItem> derive_assessment_items(std::span<const Annotation> seed, std::size_t size);

struct AssessmentAnswer {
  MainClass expected = MainClass::none;
  Subclass given = Subclass::none;
};

/// pending until `sample` answers exist; then pass iff the share of answers
/// whose main class matches the item's dominant class is >= `threshold`.
/// Only the first `sample` answers are scored.
GateStatus gate_worker(std::span<const AssessmentAnswer> answers, std::size_t sample, double threshold);

/// Per-worker assessment sequence: the sample is apportioned across main
/// classes in proportion to the pool (largest remainder, each class present in
/// the pool gets at least one slot when the sample allows), then shuffled.
std::vector<AssessmentItem> assessment_sequence(std::span<const AssessmentItem> pool, std::size_t sample,
                                                std::uint64_t seed, std::string_view worker_id);

}  // namespace emolex::tasker
