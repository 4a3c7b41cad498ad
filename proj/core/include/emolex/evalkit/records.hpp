#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace emolex::evalkit {

enum class EvaluatorKind { expert, crowd };
enum class EvaluationKind { validity, intensifier };

std::string_view to_string(EvaluatorKind kind) noexcept;
std::string_view to_string(EvaluationKind kind) noexcept;
std::optional<EvaluatorKind> parse_evaluator_kind(std::string_view name) noexcept;
std::optional<EvaluationKind> parse_evaluation_kind(std::string_view name) noexcept;

struct EvaluationTask {
  std::string group_id;
  std::string summary;
  EvaluationKind kind = EvaluationKind::validity;

  friend bool operator==(const EvaluationTask&, const EvaluationTask&) = default;
};

/// A validity record carries `score` in [1, 5]; an intensifier record
/// carries `intensifier_valid`.
struct EvaluationRecord {
  std::string group_id;
  std::string evaluator_id;
  EvaluatorKind evaluator_kind = EvaluatorKind::crowd;
  EvaluationKind kind = EvaluationKind::validity;
  std::optional<int> score;
  std::optional<bool> intensifier_valid;

  friend bool operator==(const EvaluationRecord&, const EvaluationRecord&) = default;
};

/// Throws InvalidArgumentError when the judgment does not fit the kind.
void validate(const EvaluationRecord& record);

std::string serialize_record(const EvaluationRecord& record);
EvaluationRecord parse_record(std::string_view json_line);
std::vector<EvaluationRecord> read_records(std::istream& in);
std::vector<EvaluationRecord> read_records(const std::filesystem::path& path);
void write_records(std::ostream& out, std::span<const EvaluationRecord> records);

/// Thread-safe append-only store of evaluation records, unique per
/// (evaluator, group, kind).
class EvaluationLog {
 public:
  EvaluationLog() = default;
  explicit EvaluationLog(const std::filesystem::path& path);

  /// Throws ConflictError on a repeated (evaluator, group, kind).
  void record(const EvaluationRecord& record);
  bool contains(std::string_view evaluator_id, std::string_view group_id, EvaluationKind kind) const;
  std::vector<EvaluationRecord> records() const;

 private:
  std::vector<EvaluationRecord> records_;
  std::set<std::tuple<std::string, std::string, EvaluationKind>> keys_;
  std::optional<std::ofstream> sink_;
  mutable std::mutex mutex_;
};

}  // namespace emolex::evalkit
