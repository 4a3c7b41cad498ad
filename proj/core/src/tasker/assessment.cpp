#include "emolex/tasker/assessment.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "emolex/util/error.hpp"
#include "emolex/util/rng.hpp"

namespace emolex::tasker {

std::vector<AssessmentItem> derive_assessment_items(std::span<const Annotation> seed, std::size_t size) {
  std::map<std::string, std::array<std::size_t, 3>> tallies;
  for (const auto& a : seed) ++tallies[a.group_id][static_cast<std::size_t>(main_class_of(a.subclass))];

  std::vector<AssessmentItem> items;
  for (const auto& [group, tally] : tallies) {
    std::size_t sum = tally[0] + tally[1] + tally[2];
    for (std::size_t c = 0; c < 3; ++c) {
      if (2 * tally[c] > sum) {
        items.push_back({group, static_cast<MainClass>(c)});
        break;
      }
    }
    if (items.size() == size) break;
  }
  if (items.size() < size) {
    throw ConfigError("assessment seed yields " + std::to_string(items.size()) +
                      " groups with a strict main-class majority; " + std::to_string(size) + " required");
  }
  return items;
}

GateStatus gate_worker(std::span<const AssessmentAnswer> answers, std::size_t sample, double threshold) {
  if (answers.size() < sample || sample == 0) return GateStatus::pending;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < sample; ++i) {
    if (main_class_of(answers[i].given) == answers[i].expected) ++correct;
  }
  // integer-safe form of correct / sample >= threshold
  const double needed = threshold * static_cast<double>(sample);
  return static_cast<double>(correct) + 1e-9 >= needed ? GateStatus::pass : GateStatus::fail;
}

std::vector<AssessmentItem> assessment_sequence(std::span<const AssessmentItem> pool, std::size_t sample,
                                                std::uint64_t seed, std::string_view worker_id) {
  auto rng = seeded_rng(seed, worker_id);
  std::array<std::vector<AssessmentItem>, 3> by_class;
  for (const auto& item : pool) by_class[static_cast<std::size_t>(item.dominant_main_class)].push_back(item);
  for (auto& bucket : by_class) stable_shuffle(bucket.begin(), bucket.end(), rng);

  sample = std::min(sample, pool.size());
  // Largest remainder over the whole sample, proportional to pool shares.
  std::array<std::size_t, 3> quota{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < 3; ++c) {
    const double exact = static_cast<double>(sample) * static_cast<double>(by_class[c].size()) /
                         static_cast<double>(pool.size());
    quota[c] = std::min(static_cast<std::size_t>(exact), by_class[c].size());
    assigned += quota[c];
    remainder[c] = exact - static_cast<double>(quota[c]);
  }
  while (assigned < sample) {
    std::size_t best = 3;
    for (std::size_t c = 0; c < 3; ++c) {
      if (quota[c] >= by_class[c].size()) continue;
      if (best == 3 || remainder[c] > remainder[best]) best = c;
    }
    ++quota[best];
    remainder[best] = -1.0;
    ++assigned;
  }
  // Every class present in the pool gets a slot, taken from the largest quota.
  std::size_t present = 0;
  for (const auto& bucket : by_class) present += bucket.empty() ? 0 : 1;
  if (sample >= present) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (by_class[c].empty() || quota[c] > 0) continue;
      const auto donor = static_cast<std::size_t>(std::max_element(quota.begin(), quota.end()) - quota.begin());
      --quota[donor];
      ++quota[c];
    }
  }

  std::vector<AssessmentItem> sequence;
  for (std::size_t c = 0; c < 3; ++c) {
    sequence.insert(sequence.end(), by_class[c].begin(), by_class[c].begin() + static_cast<long>(quota[c]));
  }
  stable_shuffle(sequence.begin(), sequence.end(), rng);
  return sequence;
}

}  // namespace emolex::tasker
