#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace emolex::tasker {

struct TaskerConfig {
  std::size_t assessment_size = 136;   // items in the assessment pool
  std::size_t assessment_sample = 10;  // items each worker answers before gating
  double gate_threshold = 0.80;        // pass iff correct fraction >= threshold
  std::size_t cap = 660;               // acquisition annotations per worker
  std::uint64_t seed = 1;
  std::uint16_t port = 8080;
  std::size_t expert_evaluations = 2;  // judgments collected per evaluation task
  std::size_t crowd_evaluations = 4;
};

/// Reads a JSON object with any subset of the fields above; unknown keys are
/// rejected. Throws ConfigError.
TaskerConfig parse_tasker_config(std::string_view json_text);
TaskerConfig load_tasker_config(const std::filesystem::path& path);
std::string to_json(const TaskerConfig& config);

}  // namespace emolex::tasker
