#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "emolex/model/annotation.hpp"

namespace emolex {

/// Immutable view over a set of annotations plus the worker profiles derived
/// from them. Profiles are sorted by worker id.
class Snapshot {
 public:
  Snapshot() = default;
  explicit Snapshot(std::vector<Annotation> annotations,
                    const std::map<std::string, GateStatus>& gates = {});

  const std::vector<Annotation>& annotations() const noexcept { return annotations_; }
  const std::map<std::string, WorkerProfile, std::less<>>& profiles() const noexcept { return profiles_; }
  const WorkerProfile* profile(std::string_view worker_id) const;

  std::size_t size() const noexcept { return annotations_.size(); }
  bool empty() const noexcept { return annotations_.empty(); }

  friend bool operator==(const Snapshot&, const Snapshot&) = default;

 private:
  std::vector<Annotation> annotations_;
  std::map<std::string, WorkerProfile, std::less<>> profiles_;
};

/// Append-only annotation log with a derived per-worker profile cache.
///
/// Writes are serialized; `snapshot()` returns a shared immutable view that
/// later writes never touch. When constructed with a log path, an existing log
/// is replayed first and every accepted annotation is appended and flushed.
class AnnotationStore {
 public:
  explicit AnnotationStore(std::unordered_set<std::string> known_groups);
  AnnotationStore(std::unordered_set<std::string> known_groups, const std::filesystem::path& log_path);

  AnnotationStore(const AnnotationStore&) = delete;
  AnnotationStore& operator=(const AnnotationStore&) = delete;

  /// Throws NotFoundError for an unknown group, ConflictError for a repeated
  /// (worker, group, phase).
  void record(const Annotation& annotation);

  bool contains(std::string_view worker_id, std::string_view group_id, Phase phase) const;
  bool has_group(std::string_view group_id) const;

  WorkerProfile profile(std::string_view worker_id) const;
  void set_gate_status(const std::string& worker_id, GateStatus status);

  std::shared_ptr<const Snapshot> snapshot() const;
  std::size_t size() const;

 private:
  using Key = std::tuple<std::string, std::string, Phase>;

  void apply(const Annotation& annotation);

  std::unordered_set<std::string> known_groups_;
  std::vector<Annotation> log_;
  std::set<Key, std::less<>> keys_;
  std::map<std::string, WorkerProfile, std::less<>> profiles_;
  std::map<std::string, GateStatus> gates_;
  std::optional<std::ofstream> sink_;
  mutable std::shared_ptr<const Snapshot> cached_;
  mutable std::shared_mutex mutex_;
};

}  // namespace emolex
