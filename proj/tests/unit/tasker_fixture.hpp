#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "emolex/evalkit/records.hpp"
#include "emolex/model/annotation_store.hpp"
#include "emolex/tasker/tasker.hpp"
#include "test_support.hpp"

namespace emolex::test {

/// A Tasker over `n` synthetic groups whose first ten form the assessment
/// pool: eight emotion items, one intensifying, one none.
struct TaskerRig {
  explicit TaskerRig(std::size_t n = 60, tasker::TaskerConfig config = small_config())
      : groups(synthetic_groups(n)) {
    for (std::size_t i = 0; i < 10; ++i) {
      const MainClass c = i < 8 ? MainClass::emotion : i == 8 ? MainClass::intensifying : MainClass::none;
      items.push_back({groups[i].id, c});
      expected[groups[i].id] = c;
    }
    std::unordered_set<std::string> known;
    for (const auto& g : groups) known.insert(g.id);
    store = std::make_unique<AnnotationStore>(known);
    tasker = std::make_unique<tasker::Tasker>(config, groups, items, *store, evaluations,
                                              stepping_clock(t0(), std::chrono::seconds(1)));
  }

  static tasker::TaskerConfig small_config() {
    tasker::TaskerConfig c;
    c.assessment_size = 10;
    c.assessment_sample = 10;
    c.cap = 660;
    c.seed = 3;
    return c;
  }

  static Subclass right_answer(MainClass c) {
    return c == MainClass::emotion ? Subclass::fear : c == MainClass::intensifying ? Subclass::amplifying
                                                                                    : Subclass::none;
  }
  static Subclass wrong_answer(MainClass c) { return c == MainClass::none ? Subclass::joy : Subclass::none; }

  /// Answers the worker's whole assessment sequence, the first `correct` answers right.
  GateStatus take_assessment(const std::string& worker, std::size_t correct) {
    tasker->register_worker(worker);
    for (std::size_t i = 0;; ++i) {
      const auto next = tasker->next_task(worker);
      if (!next.task || next.task->kind != tasker::TaskKind::assessment) break;
      const auto c = expected.at(next.task->group_id);
      tasker->submit(worker, next.task->group_id, i < correct ? right_answer(c) : wrong_answer(c));
    }
    return tasker->gate_worker(worker);
  }

  std::vector<corpus::TermGroup> groups;
  std::vector<tasker::AssessmentItem> items;
  std::unordered_map<std::string, MainClass> expected;
  std::unique_ptr<AnnotationStore> store;
  evalkit::EvaluationLog evaluations;
  std::unique_ptr<tasker::Tasker> tasker;
};

}  // namespace emolex::test
