#include "emolex/tasker/tasker.hpp"

#include <algorithm>

#include "emolex/util/error.hpp"
#include "emolex/util/rng.hpp"

namespace emolex::tasker {

using evalkit::EvaluationKind;
using evalkit::EvaluatorKind;

std::string_view to_string(TaskKind kind) noexcept {
  switch (kind) {
    case TaskKind::assessment:
      return "assessment";
    case TaskKind::acquisition:
      return "acquisition";
    case TaskKind::evaluation:
      return "evaluation";
  }
  return "acquisition";
}

std::string_view to_string(ExhaustReason reason) noexcept {
  switch (reason) {
    case ExhaustReason::cap_reached:
      return "cap_reached";
    case ExhaustReason::no_unseen_group:
      return "no_unseen_group";
    case ExhaustReason::gate_failed:
      return "gate_failed";
    case ExhaustReason::no_evaluation_task:
      return "no_evaluation_task";
  }
  return "cap_reached";
}

Tasker::Tasker(TaskerConfig config, std::vector<corpus::TermGroup> groups, std::vector<AssessmentItem> assessment,
               AnnotationStore& store, evalkit::EvaluationLog& evaluations, Clock clock)
    : config_(config),
      groups_(std::move(groups)),
      assessment_(std::move(assessment)),
      store_(store),
      evaluations_(evaluations),
      clock_(std::move(clock)) {
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (!group_index_.emplace(groups_[i].id, i).second) {
      throw ConfigError("duplicate group id '" + groups_[i].id + "'");
    }
    if (!store_.has_group(groups_[i].id)) {
      throw ConfigError("group '" + groups_[i].id + "' is unknown to the annotation store");
    }
  }
  for (const auto& item : assessment_) {
    if (!group_index_.count(item.group_id)) {
      throw ConfigError("assessment item '" + item.group_id + "' is not a known group");
    }
    assessment_class_[item.group_id] = item.dominant_main_class;
  }

  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (assessment_class_.count(groups_[i].id)) continue;
    pool_slot_[i] = pool_.size();
    pool_.push_back(i);
  }
  rank_.resize(pool_.size());
  std::vector<std::size_t> order(pool_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto rng = seeded_rng(config_.seed, "acquisition-rank");
  stable_shuffle(order.begin(), order.end(), rng);
  for (std::size_t r = 0; r < order.size(); ++r) rank_[order[r]] = r;
  load_.assign(pool_.size(), 0);
  for (std::size_t slot = 0; slot < pool_.size(); ++slot) schedule_.emplace(0, rank_[slot], slot);

  replay(*store_.snapshot());
}

void Tasker::replay(const Snapshot& snapshot) {
  for (const auto& a : snapshot.annotations()) {
    auto& state = ensure_worker(a.worker_id, EvaluatorKind::crowd);
    if (a.phase == Phase::assessment) {
      const auto it = assessment_class_.find(a.group_id);
      if (it == assessment_class_.end()) continue;
      state.answers.push_back({it->second, a.subclass});
    } else if (a.phase == Phase::acquisition) {
      const auto gi = group_index_.find(a.group_id);
      if (gi == group_index_.end()) continue;
      const auto ps = pool_slot_.find(gi->second);
      if (ps == pool_slot_.end()) continue;
      state.seen.insert(ps->second);
      ++state.acquisition_count;
      take_acquisition_slot(ps->second);
    }
  }
  for (auto& [id, state] : workers_) regate(id, state);
}

void Tasker::regate(const std::string& worker_id, WorkerState& state) {
  if (state.plan.empty()) {
    state.gate = GateStatus::pass;
  } else {
    state.gate = emolex::tasker::gate_worker(state.answers, state.plan.size(), config_.gate_threshold);
  }
  store_.set_gate_status(worker_id, state.gate);
}

Tasker::WorkerState& Tasker::ensure_worker(const std::string& worker_id, EvaluatorKind kind) {
  auto it = workers_.find(worker_id);
  if (it != workers_.end()) return it->second;
  WorkerState state;
  state.kind = kind;
  state.plan = assessment_sequence(assessment_, config_.assessment_sample, config_.seed, worker_id);
  if (state.plan.empty()) state.gate = GateStatus::pass;
  return workers_.emplace(worker_id, std::move(state)).first->second;
}

Tasker::WorkerState& Tasker::worker(const std::string& worker_id) {
  auto it = workers_.find(worker_id);
  if (it == workers_.end()) throw NotFoundError("unknown worker '" + worker_id + "'");
  return it->second;
}

const Tasker::WorkerState& Tasker::worker(const std::string& worker_id) const {
  auto it = workers_.find(worker_id);
  if (it == workers_.end()) throw NotFoundError("unknown worker '" + worker_id + "'");
  return it->second;
}

void Tasker::register_worker(const std::string& worker_id, EvaluatorKind kind) {
  if (worker_id.empty()) throw InvalidArgumentError("worker id must be non-empty");
  std::lock_guard lock(mutex_);
  auto& state = ensure_worker(worker_id, kind);
  if (state.plan.empty()) store_.set_gate_status(worker_id, GateStatus::pass);
}

bool Tasker::is_registered(std::string_view worker_id) const {
  std::lock_guard lock(mutex_);
  return workers_.find(worker_id) != workers_.end();
}

void Tasker::take_acquisition_slot(std::size_t slot) {
  schedule_.erase({load_[slot], rank_[slot], slot});
  ++load_[slot];
  schedule_.emplace(load_[slot], rank_[slot], slot);
}

NextTask Tasker::next_task(const std::string& worker_id) {
  std::lock_guard lock(mutex_);
  auto& state = worker(worker_id);
  if (state.outstanding) return {state.outstanding, std::nullopt};

  if (state.gate == GateStatus::pending) {
    const auto& item = state.plan.at(state.answers.size());
    state.outstanding = TaskAssignment{worker_id, item.group_id, TaskKind::assessment, clock_(), std::nullopt};
    return {state.outstanding, std::nullopt};
  }
  if (state.gate == GateStatus::fail) return {std::nullopt, ExhaustReason::gate_failed};
  if (state.acquisition_count >= config_.cap) return {std::nullopt, ExhaustReason::cap_reached};

  for (const auto& entry : schedule_) {
    const std::size_t slot = std::get<2>(entry);
    if (state.seen.count(slot)) continue;
    state.seen.insert(slot);
    take_acquisition_slot(slot);
    state.outstanding =
        TaskAssignment{worker_id, groups_[pool_[slot]].id, TaskKind::acquisition, clock_(), std::nullopt};
    return {state.outstanding, std::nullopt};
  }
  return {std::nullopt, ExhaustReason::no_unseen_group};
}

SubmitResult Tasker::submit(const std::string& worker_id, const std::string& group_id, Subclass subclass) {
  std::lock_guard lock(mutex_);
  auto& state = worker(worker_id);
  if (!group_index_.count(group_id)) throw NotFoundError("unknown group '" + group_id + "'");

  if (!state.outstanding || state.outstanding->group_id != group_id) {
    if (store_.contains(worker_id, group_id, Phase::assessment) ||
        store_.contains(worker_id, group_id, Phase::acquisition)) {
      throw ConflictError("worker '" + worker_id + "' already annotated '" + group_id + "'");
    }
    throw RejectedError("no outstanding assignment of '" + group_id + "' to worker '" + worker_id + "'");
  }

  const TaskKind kind = state.outstanding->kind;
  const Phase phase = kind == TaskKind::assessment ? Phase::assessment : Phase::acquisition;
  store_.record(Annotation{worker_id, group_id, subclass, phase, clock_()});
  state.outstanding.reset();

  if (kind == TaskKind::assessment) {
    state.answers.push_back({assessment_class_.at(group_id), subclass});
    if (state.answers.size() >= state.plan.size()) regate(worker_id, state);
  } else {
    ++state.acquisition_count;
  }
  return {kind, subclass, main_class_of(subclass), status_of(worker_id, state)};
}

GateStatus Tasker::gate_worker(const std::string& worker_id) const {
  std::lock_guard lock(mutex_);
  return worker(worker_id).gate;
}

WorkerStatus Tasker::status_of(const std::string& worker_id, const WorkerState& state) const {
  WorkerStatus s;
  s.worker_id = worker_id;
  s.evaluator_kind = state.kind;
  s.gate = state.gate;
  s.assessment_answered = state.answers.size();
  s.assessment_required = state.plan.size();
  for (const auto& answer : state.answers) {
    if (main_class_of(answer.given) == answer.expected) ++s.assessment_correct;
  }
  s.acquisition_count = state.acquisition_count;
  s.cap = config_.cap;
  s.evaluation_count = state.evaluation_count;
  s.outstanding = state.outstanding ? state.outstanding : state.outstanding_evaluation;
  return s;
}

WorkerStatus Tasker::status(const std::string& worker_id) const {
  std::lock_guard lock(mutex_);
  return status_of(worker_id, worker(worker_id));
}

const corpus::TermGroup& Tasker::group(std::string_view group_id) const {
  const auto it = group_index_.find(std::string(group_id));
  if (it == group_index_.end()) throw NotFoundError("unknown group '" + std::string(group_id) + "'");
  return groups_[it->second];
}

std::map<std::string, std::size_t> Tasker::acquisition_load() const {
  std::lock_guard lock(mutex_);
  std::map<std::string, std::size_t> out;
  for (std::size_t slot = 0; slot < pool_.size(); ++slot) out[groups_[pool_[slot]].id] = load_[slot];
  return out;
}

void Tasker::set_evaluation_tasks(std::vector<evalkit::EvaluationTask> tasks) {
  std::lock_guard lock(mutex_);
  for (const auto& task : tasks) {
    if (!group_index_.count(task.group_id)) {
      throw NotFoundError("evaluation task for unknown group '" + task.group_id + "'");
    }
  }
  eval_tasks_ = std::move(tasks);
  eval_expert_load_.assign(eval_tasks_.size(), 0);
  eval_crowd_load_.assign(eval_tasks_.size(), 0);
  for (auto& [id, state] : workers_) {
    state.seen_evaluations.clear();
    state.outstanding_evaluation.reset();
    state.outstanding_evaluation_index.reset();
    state.evaluation_count = 0;
  }
  for (const auto& record : evaluations_.records()) {
    for (std::size_t i = 0; i < eval_tasks_.size(); ++i) {
      if (eval_tasks_[i].group_id != record.group_id || eval_tasks_[i].kind != record.kind) continue;
      auto& state = ensure_worker(record.evaluator_id, record.evaluator_kind);
      state.seen_evaluations.insert(i);
      ++state.evaluation_count;
      ++(record.evaluator_kind == EvaluatorKind::expert ? eval_expert_load_ : eval_crowd_load_)[i];
    }
  }
}

std::optional<evalkit::EvaluationTask> Tasker::evaluation_task(std::string_view group_id,
                                                               EvaluationKind kind) const {
  std::lock_guard lock(mutex_);
  for (const auto& task : eval_tasks_) {
    if (task.group_id == group_id && task.kind == kind) return task;
  }
  return std::nullopt;
}

NextTask Tasker::next_evaluation_task(const std::string& worker_id) {
  std::lock_guard lock(mutex_);
  auto& state = worker(worker_id);
  if (state.outstanding_evaluation) return {state.outstanding_evaluation, std::nullopt};

  const bool expert = state.kind == EvaluatorKind::expert;
  auto& load = expert ? eval_expert_load_ : eval_crowd_load_;
  const std::size_t quota = expert ? config_.expert_evaluations : config_.crowd_evaluations;

  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < eval_tasks_.size(); ++i) {
    if (load[i] >= quota || state.seen_evaluations.count(i)) continue;
    if (!best || load[i] < load[*best]) best = i;
  }
  if (!best) return {std::nullopt, ExhaustReason::no_evaluation_task};

  ++load[*best];
  state.seen_evaluations.insert(*best);
  state.outstanding_evaluation_index = *best;
  state.outstanding_evaluation =
      TaskAssignment{worker_id, eval_tasks_[*best].group_id, TaskKind::evaluation, clock_(), eval_tasks_[*best].kind};
  return {state.outstanding_evaluation, std::nullopt};
}

evalkit::EvaluationRecord Tasker::submit_evaluation(const std::string& worker_id, const std::string& group_id,
                                                    std::optional<int> score,
                                                    std::optional<bool> intensifier_valid) {
  std::lock_guard lock(mutex_);
  auto& state = worker(worker_id);
  if (!group_index_.count(group_id)) throw NotFoundError("unknown group '" + group_id + "'");
  if (!state.outstanding_evaluation || state.outstanding_evaluation->group_id != group_id) {
    for (const auto kind : {EvaluationKind::validity, EvaluationKind::intensifier}) {
      if (evaluations_.contains(worker_id, group_id, kind)) {
        throw ConflictError("evaluator '" + worker_id + "' already judged '" + group_id + "'");
      }
    }
    throw RejectedError("no outstanding evaluation of '" + group_id + "' for '" + worker_id + "'");
  }

  evalkit::EvaluationRecord record;
  record.group_id = group_id;
  record.evaluator_id = worker_id;
  record.evaluator_kind = state.kind;
  record.kind = *state.outstanding_evaluation->evaluation_kind;
  record.score = score;
  record.intensifier_valid = intensifier_valid;
  evalkit::validate(record);
  evaluations_.record(record);

  state.outstanding_evaluation.reset();
  state.outstanding_evaluation_index.reset();
  ++state.evaluation_count;
  return record;
}

}  // namespace emolex::tasker
