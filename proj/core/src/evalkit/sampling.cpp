#include "emolex/evalkit/sampling.hpp"

#include <algorithm>
#include <unordered_map>

#include "emolex/evalkit/summary.hpp"
#include "emolex/util/error.hpp"
#include "emolex/util/rng.hpp"

namespace emolex::evalkit {

std::vector<std::string> sample_validity_set(std::span<const lexicon::LexiconEntry> entries, std::uint64_t seed,
                                             std::size_t per_stratum, std::span<const std::uint64_t> strata) {
  std::vector<std::string> sample;
  for (const auto n : strata) {
    std::vector<std::string> candidates;
    for (const auto& e : entries) {
      if (e.total == n) candidates.push_back(e.group_id);
    }
    if (candidates.size() < per_stratum) {
      throw InsufficientDataError("stratum " + std::to_string(n) + " has " + std::to_string(candidates.size()) +
                                  " groups; " + std::to_string(per_stratum) + " required");
    }
    std::sort(candidates.begin(), candidates.end());
    auto rng = seeded_rng(seed, "validity-" + std::to_string(n));
    stable_shuffle(candidates.begin(), candidates.end(), rng);
    sample.insert(sample.end(), candidates.begin(), candidates.begin() + static_cast<long>(per_stratum));
  }
  return sample;
}

std::vector<std::string> sample_intensifier_set(std::span<const lexicon::LexiconEntry> entries) {
  std::vector<const lexicon::LexiconEntry*> hits;
  for (const auto& e : entries) {
    if (e.counts[slot(Subclass::amplifying)] + e.counts[slot(Subclass::weakening)] > 0) hits.push_back(&e);
  }
  std::sort(hits.begin(), hits.end(), [](auto* a, auto* b) { return a->stem < b->stem; });
  std::vector<std::string> out;
  out.reserve(hits.size());
  for (const auto* e : hits) out.push_back(e->group_id);
  return out;
}

std::vector<EvaluationTask> make_evaluation_tasks(std::span<const lexicon::LexiconEntry> entries,
                                                  std::span<const std::string> group_ids, EvaluationKind kind) {
  std::unordered_map<std::string_view, const lexicon::LexiconEntry*> by_id;
  for (const auto& e : entries) by_id.emplace(e.group_id, &e);
  std::vector<EvaluationTask> tasks;
  tasks.reserve(group_ids.size());
  for (const auto& id : group_ids) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw NotFoundError("no lexicon entry for group '" + id + "'");
    tasks.push_back({id, render_summary(*it->second), kind});
  }
  return tasks;
}

}  // namespace emolex::evalkit
