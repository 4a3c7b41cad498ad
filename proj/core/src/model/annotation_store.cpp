#include "emolex/model/annotation_store.hpp"

#include <mutex>

#include "emolex/util/error.hpp"

namespace emolex {

namespace {

void count(std::map<std::string, WorkerProfile, std::less<>>& profiles, const Annotation& a) {
  auto& profile = profiles[a.worker_id];
  profile.worker_id = a.worker_id;
  ++profile.counts[static_cast<std::size_t>(a.phase)][slot(a.subclass)];
}

}  // namespace

Snapshot::Snapshot(std::vector<Annotation> annotations, const std::map<std::string, GateStatus>& gates)
    : annotations_(std::move(annotations)) {
  for (const auto& a : annotations_) count(profiles_, a);
  for (const auto& [worker, status] : gates) {
    auto& profile = profiles_[worker];
    profile.worker_id = worker;
    profile.gate = status;
  }
}

const WorkerProfile* Snapshot::profile(std::string_view worker_id) const {
  const auto it = profiles_.find(worker_id);
  return it == profiles_.end() ? nullptr : &it->second;
}

AnnotationStore::AnnotationStore(std::unordered_set<std::string> known_groups)
    : known_groups_(std::move(known_groups)) {}

AnnotationStore::AnnotationStore(std::unordered_set<std::string> known_groups,
                                 const std::filesystem::path& log_path)
    : AnnotationStore(std::move(known_groups)) {
  if (std::filesystem::exists(log_path)) {
    for (const auto& a : read_annotation_log(log_path)) record(a);
  }
  sink_.emplace(log_path, std::ios::app);
  if (!*sink_) throw IoError("cannot open annotation log '" + log_path.string() + "' for append");
}

void AnnotationStore::apply(const Annotation& a) {
  keys_.emplace(a.worker_id, a.group_id, a.phase);
  log_.push_back(a);
  count(profiles_, a);
  cached_.reset();
}

void AnnotationStore::record(const Annotation& a) {
  std::unique_lock lock(mutex_);
  if (!known_groups_.count(a.group_id)) throw NotFoundError("unknown group '" + a.group_id + "'");
  if (keys_.count(std::make_tuple(a.worker_id, a.group_id, a.phase))) {
    throw ConflictError("worker '" + a.worker_id + "' already annotated '" + a.group_id + "' in " +
                        std::string(to_string(a.phase)));
  }
  if (sink_) {
    *sink_ << serialize_annotation(a) << '\n';
    sink_->flush();
    if (!*sink_) throw IoError("annotation log write failed");
  }
  apply(a);
}

bool AnnotationStore::contains(std::string_view worker_id, std::string_view group_id, Phase phase) const {
  std::shared_lock lock(mutex_);
  return keys_.count(std::make_tuple(std::string(worker_id), std::string(group_id), phase)) != 0;
}

bool AnnotationStore::has_group(std::string_view group_id) const {
  std::shared_lock lock(mutex_);
  return known_groups_.count(std::string(group_id)) != 0;
}

WorkerProfile AnnotationStore::profile(std::string_view worker_id) const {
  std::shared_lock lock(mutex_);
  WorkerProfile out;
  if (const auto it = profiles_.find(worker_id); it != profiles_.end()) out = it->second;
  out.worker_id = std::string(worker_id);
  if (const auto it = gates_.find(out.worker_id); it != gates_.end()) out.gate = it->second;
  return out;
}

void AnnotationStore::set_gate_status(const std::string& worker_id, GateStatus status) {
  std::unique_lock lock(mutex_);
  gates_[worker_id] = status;
  cached_.reset();
}

std::shared_ptr<const Snapshot> AnnotationStore::snapshot() const {
  {
    std::shared_lock lock(mutex_);
    if (cached_) return cached_;
  }
  std::unique_lock lock(mutex_);
  if (!cached_) cached_ = std::make_shared<const Snapshot>(log_, gates_);
  return cached_;
}

std::size_t AnnotationStore::size() const {
  std::shared_lock lock(mutex_);
  return log_.size();
}

}  // namespace emolex
