#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "emolex/corpus/term_groups.hpp"
#include "emolex/evalkit/records.hpp"
#include "emolex/model/annotation_store.hpp"
#include "emolex/tasker/assessment.hpp"
#include "emolex/tasker/config.hpp"
#include "emolex/util/time.hpp"

namespace emolex::tasker {

enum class TaskKind { assessment, acquisition, evaluation };
std::string_view to_string(TaskKind kind) noexcept;

struct TaskAssignment {
  std::string worker_id;
  std::string group_id;
  TaskKind kind = TaskKind::acquisition;
  Timestamp issued_at{};
  std::optional<evalkit::EvaluationKind> evaluation_kind;  // set for evaluation tasks

  friend bool operator==(const TaskAssignment&, const TaskAssignment&) = default;
};

enum class ExhaustReason { cap_reached, no_unseen_group, gate_failed, no_evaluation_task };
std::string_view to_string(ExhaustReason reason) noexcept;

struct NextTask {
  std::optional<TaskAssignment> task;
  std::optional<ExhaustReason> exhausted;

  bool has_task() const noexcept { return task.has_value(); }
};

struct WorkerStatus {
  std::string worker_id;
  evalkit::EvaluatorKind evaluator_kind = evalkit::EvaluatorKind::crowd;
  GateStatus gate = GateStatus::pending;
  std::size_t assessment_answered = 0;
  std::size_t assessment_required = 0;
  std::size_t assessment_correct = 0;
  std::size_t acquisition_count = 0;
  std::size_t cap = 0;
  std::size_t evaluation_count = 0;
  std::optional<TaskAssignment> outstanding;
};

struct SubmitResult {
  TaskKind kind = TaskKind::acquisition;
  Subclass subclass = Subclass::none;
  MainClass main_class = MainClass::none;
  WorkerStatus status;
};

/// Serves annotation and evaluation tasks.
///
/// Ungated workers first answer their assessment sequence; gating happens
/// once the sequence is complete. Gated workers receive acquisition groups
/// fewest-assignments-first (ties by a seeded rank), never the same group
/// twice, up to `cap`. Evaluators receive evaluation tasks until every task
/// has its per-kind quota of judgments.
///
/// All state transitions happen under one lock, so the cap and uniqueness
/// hold under concurrent requests.
class Tasker {
 public:
  Tasker(TaskerConfig config, std::vector<corpus::TermGroup> groups, std::vector<AssessmentItem> assessment,
         AnnotationStore& store, evalkit::EvaluationLog& evaluations, Clock clock = system_clock());

  /// Idempotent; re-registering keeps the original evaluator kind.
  void register_worker(const std::string& worker_id,
                       evalkit::EvaluatorKind kind = evalkit::EvaluatorKind::crowd);
  bool is_registered(std::string_view worker_id) const;

  /// Returns the outstanding assignment if one exists. Throws NotFoundError
  /// for unregistered workers.
  NextTask next_task(const std::string& worker_id);

  /// Throws NotFoundError (worker/group), ConflictError (already annotated),
  /// RejectedError (no outstanding assignment for this group).
  SubmitResult submit(const std::string& worker_id, const std::string& group_id, Subclass subclass);

  GateStatus gate_worker(const std::string& worker_id) const;
  WorkerStatus status(const std::string& worker_id) const;

  const corpus::TermGroup& group(std::string_view group_id) const;
  const std::vector<corpus::TermGroup>& groups() const noexcept { return groups_; }
  const std::vector<AssessmentItem>& assessment_items() const noexcept { return assessment_; }
  const TaskerConfig& config() const noexcept { return config_; }

  void set_evaluation_tasks(std::vector<evalkit::EvaluationTask> tasks);
  std::optional<evalkit::EvaluationTask> evaluation_task(std::string_view group_id,
                                                         evalkit::EvaluationKind kind) const;
  NextTask next_evaluation_task(const std::string& worker_id);
  /// Exactly one of `score` / `intensifier_valid` must be given, matching the
  /// outstanding task's kind.
  evalkit::EvaluationRecord submit_evaluation(const std::string& worker_id, const std::string& group_id,
                                              std::optional<int> score, std::optional<bool> intensifier_valid);

  /// Per-group acquisition assignment counts (submitted + outstanding).
  std::map<std::string, std::size_t> acquisition_load() const;

 private:
  struct WorkerState {
    evalkit::EvaluatorKind kind = evalkit::EvaluatorKind::crowd;
    std::vector<AssessmentItem> plan;
    std::vector<AssessmentAnswer> answers;
    GateStatus gate = GateStatus::pending;
    std::unordered_set<std::size_t> seen;
    std::size_t acquisition_count = 0;
    std::optional<TaskAssignment> outstanding;
    std::unordered_set<std::size_t> seen_evaluations;
    std::size_t evaluation_count = 0;
    std::optional<TaskAssignment> outstanding_evaluation;
    std::optional<std::size_t> outstanding_evaluation_index;
  };

  WorkerState& worker(const std::string& worker_id);
  const WorkerState& worker(const std::string& worker_id) const;
  WorkerState& ensure_worker(const std::string& worker_id, evalkit::EvaluatorKind kind);
  WorkerStatus status_of(const std::string& worker_id, const WorkerState& state) const;
  void take_acquisition_slot(std::size_t pool_index);
  void replay(const Snapshot& snapshot);
  void regate(const std::string& worker_id, WorkerState& state);

  TaskerConfig config_;
  std::vector<corpus::TermGroup> groups_;
  std::unordered_map<std::string, std::size_t> group_index_;
  std::vector<AssessmentItem> assessment_;
  std::unordered_map<std::string, MainClass> assessment_class_;
  AnnotationStore& store_;
  evalkit::EvaluationLog& evaluations_;
  Clock clock_;

  // acquisition pool, as indices into groups_
  std::vector<std::size_t> pool_;
  std::unordered_map<std::size_t, std::size_t> pool_slot_;  // groups_ index -> pool_ slot
  std::vector<std::size_t> load_;                           // per pool slot
  std::vector<std::size_t> rank_;                           // per pool slot, seeded tie-break
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> schedule_;  // (load, rank, slot)

  std::vector<evalkit::EvaluationTask> eval_tasks_;
  std::vector<std::size_t> eval_expert_load_;
  std::vector<std::size_t> eval_crowd_load_;

  std::map<std::string, WorkerState, std::less<>> workers_;
  mutable std::mutex mutex_;
};

}  // namespace emolex::tasker
