#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/model/subclass.hpp"
#include "emolex/util/time.hpp"

namespace emolex {

enum class Phase : std::uint8_t { assessment, acquisition, evaluation_batch };
inline constexpr std::size_t kPhaseCount = 3;

std::string_view to_string(Phase phase) noexcept;
std::optional<Phase> parse_phase(std::string_view name) noexcept;

/// One worker's label for one term group in one phase. (worker, group, phase)
/// is unique within a store.
struct Annotation {
  std::string worker_id;
  std::string group_id;
  Subclass subclass = Subclass::none;
  Phase phase = Phase::acquisition;
  Timestamp timestamp{};

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

enum class GateStatus : std::uint8_t { pending, pass, fail };
std::string_view to_string(GateStatus status) noexcept;

struct WorkerProfile {
  std::string worker_id;
  std::array<SubclassCounts, kPhaseCount> counts{};
  GateStatus gate = GateStatus::pending;
  bool excluded = false;

  const SubclassCounts& counts_for(Phase phase) const { return counts[static_cast<std::size_t>(phase)]; }
  std::uint64_t total(Phase phase) const { return emolex::total(counts_for(phase)); }
  /// Largest single-subclass share of the worker's annotations in `phase`;
  /// nullopt when the worker has none there.
  std::optional<double> mu(Phase phase) const;
  bool gate_passed() const { return gate == GateStatus::pass; }

  friend bool operator==(const WorkerProfile&, const WorkerProfile&) = default;
};

/// Line-delimited JSON, one annotation per line with fields
/// worker_id, group_id, subclass, phase, timestamp.
std::string serialize_annotation(const Annotation& a);
Annotation parse_annotation(std::string_view json_line);

std::vector<Annotation> read_annotation_log(std::istream& in);
std::vector<Annotation> read_annotation_log(const std::filesystem::path& path);
void write_annotation_log(std::ostream& out, std::span<const Annotation> annotations);

}  // namespace emolex
