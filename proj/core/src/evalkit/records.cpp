#include "emolex/evalkit/records.hpp"

#include <json.hpp>

#include "emolex/util/error.hpp"

namespace emolex::evalkit {

using nlohmann::json;

std::string_view to_string(EvaluatorKind kind) noexcept {
  return kind == EvaluatorKind::expert ? "expert" : "crowd";
}

std::string_view to_string(EvaluationKind kind) noexcept {
  return kind == EvaluationKind::validity ? "validity" : "intensifier";
}

std::optional<EvaluatorKind> parse_evaluator_kind(std::string_view name) noexcept {
  if (name == "expert") return EvaluatorKind::expert;
  if (name == "crowd") return EvaluatorKind::crowd;
  return std::nullopt;
}

std::optional<EvaluationKind> parse_evaluation_kind(std::string_view name) noexcept {
  if (name == "validity") return EvaluationKind::validity;
  if (name == "intensifier") return EvaluationKind::intensifier;
  return std::nullopt;
}

void validate(const EvaluationRecord& r) {
  if (r.group_id.empty() || r.evaluator_id.empty()) {
    throw InvalidArgumentError("evaluation record needs group and evaluator");
  }
  if (r.kind == EvaluationKind::validity) {
    if (!r.score || *r.score < 1 || *r.score > 5) {
      throw InvalidArgumentError("validity score must be an integer in [1, 5]");
    }
    if (r.intensifier_valid) throw InvalidArgumentError("validity record cannot carry intensifier_valid");
  } else {
    if (!r.intensifier_valid) throw InvalidArgumentError("intensifier record needs intensifier_valid");
    if (r.score) throw InvalidArgumentError("intensifier record cannot carry a score");
  }
}

std::string serialize_record(const EvaluationRecord& r) {
  json j;
  j["group_id"] = r.group_id;
  j["evaluator_id"] = r.evaluator_id;
  j["evaluator_kind"] = to_string(r.evaluator_kind);
  j["kind"] = to_string(r.kind);
  if (r.score) j["score"] = *r.score;
  if (r.intensifier_valid) j["intensifier_valid"] = *r.intensifier_valid;
  return j.dump();
}

EvaluationRecord parse_record(std::string_view json_line) {
  try {
    const auto j = json::parse(json_line);
    EvaluationRecord r;
    r.group_id = j.at("group_id").get<std::string>();
    r.evaluator_id = j.at("evaluator_id").get<std::string>();
    const auto evaluator = parse_evaluator_kind(j.at("evaluator_kind").get<std::string>());
    const auto kind = parse_evaluation_kind(j.at("kind").get<std::string>());
    if (!evaluator || !kind) throw InvalidArgumentError("unknown evaluator or evaluation kind");
    r.evaluator_kind = *evaluator;
    r.kind = *kind;
    if (j.contains("score")) r.score = j.at("score").get<int>();
    if (j.contains("intensifier_valid")) r.intensifier_valid = j.at("intensifier_valid").get<bool>();
    validate(r);
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("malformed evaluation record: ") + e.what());
  }
}

std::vector<EvaluationRecord> read_records(std::istream& in) {
  std::vector<EvaluationRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const InvalidArgumentError& e) {
      throw InvalidArgumentError("evaluation log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<EvaluationRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open evaluation records '" + path.string() + "'");
  return read_records(in);
}

void write_records(std::ostream& out, std::span<const EvaluationRecord> records) {
  for (const auto& r : records) out << serialize_record(r) << '\n';
}

EvaluationLog::EvaluationLog(const std::filesystem::path& path) {
  if (std::filesystem::exists(path)) {
    for (const auto& r : read_records(path)) record(r);
  }
  sink_.emplace(path, std::ios::app);
  if (!*sink_) throw IoError("cannot open evaluation log '" + path.string() + "' for append");
}

void EvaluationLog::record(const EvaluationRecord& r) {
  validate(r);
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(r.evaluator_id, r.group_id, r.kind);
  if (keys_.count(key)) {
    throw ConflictError("evaluator '" + r.evaluator_id + "' already judged '" + r.group_id + "'");
  }
  if (sink_) {
    *sink_ << serialize_record(r) << '\n';
    sink_->flush();
  }
  keys_.insert(std::move(key));
  records_.push_back(r);
}

bool EvaluationLog::contains(std::string_view evaluator_id, std::string_view group_id,
                             EvaluationKind kind) const {
  std::lock_guard lock(mutex_);
  return keys_.count(std::make_tuple(std::string(evaluator_id), std::string(group_id), kind)) != 0;
}

std::vector<EvaluationRecord> EvaluationLog::records() const {
  std::lock_guard lock(mutex_);
  return records_;
}

}  // namespace emolex::evalkit
