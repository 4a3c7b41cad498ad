#include "emolex/model/annotation.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "emolex/util/error.hpp"

namespace emolex {

using nlohmann::json;

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::assessment:
      return "assessment";
    case Phase::acquisition:
      return "acquisition";
    case Phase::evaluation_batch:
      return "evaluation_batch";
  }
  return "acquisition";
}

std::optional<Phase> parse_phase(std::string_view name) noexcept {
  if (name == "assessment") return Phase::assessment;
  if (name == "acquisition") return Phase::acquisition;
  if (name == "evaluation_batch") return Phase::evaluation_batch;
  return std::nullopt;
}

std::string_view to_string(GateStatus status) noexcept {
  switch (status) {
    case GateStatus::pending:
      return "pending";
    case GateStatus::pass:
      return "pass";
    case GateStatus::fail:
      return "fail";
  }
  return "pending";
}

std::optional<double> WorkerProfile::mu(Phase phase) const {
  const auto& c = counts_for(phase);
  const auto sum = emolex::total(c);
  if (sum == 0) return std::nullopt;
  return static_cast<double>(*std::max_element(c.begin(), c.end())) / static_cast<double>(sum);
}

std::string serialize_annotation(const Annotation& a) {
  json record;
  record["worker_id"] = a.worker_id;
  record["group_id"] = a.group_id;
  record["subclass"] = to_string(a.subclass);
  record["phase"] = to_string(a.phase);
  record["timestamp"] = format_timestamp(a.timestamp);
  return record.dump();
}

Annotation parse_annotation(std::string_view json_line) {
  try {
    const auto record = json::parse(json_line);
    Annotation a;
    a.worker_id = record.at("worker_id").get<std::string>();
    a.group_id = record.at("group_id").get<std::string>();
    const auto subclass = parse_subclass(record.at("subclass").get<std::string>());
    if (!subclass) throw InvalidArgumentError("unknown subclass");
    a.subclass = *subclass;
    const auto phase = parse_phase(record.at("phase").get<std::string>());
    if (!phase) throw InvalidArgumentError("unknown phase");
    a.phase = *phase;
    a.timestamp = parse_timestamp(record.at("timestamp").get<std::string>());
    if (a.worker_id.empty() || a.group_id.empty()) throw InvalidArgumentError("empty worker or group id");
    return a;
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("malformed annotation: ") + e.what());
  }
}

std::vector<Annotation> read_annotation_log(std::istream& in) {
  std::vector<Annotation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_annotation(line));
    } catch (const InvalidArgumentError& e) {
      throw InvalidArgumentError("annotation log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Annotation> read_annotation_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation log '" + path.string() + "'");
  return read_annotation_log(in);
}

void write_annotation_log(std::ostream& out, std::span<const Annotation> annotations) {
  for (const auto& a : annotations) out << serialize_annotation(a) << '\n';
}

}  // namespace emolex
