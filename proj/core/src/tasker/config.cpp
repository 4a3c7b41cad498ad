#include "emolex/tasker/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "emolex/util/error.hpp"

namespace emolex::tasker {

using nlohmann::json;

TaskerConfig parse_tasker_config(std::string_view json_text) {
  TaskerConfig config;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("tasker config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("tasker config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "assessment_size") {
        config.assessment_size = value.get<std::size_t>();
      } else if (key == "assessment_sample") {
        config.assessment_sample = value.get<std::size_t>();
      } else if (key == "gate_threshold") {
        config.gate_threshold = value.get<double>();
      } else if (key == "cap") {
        config.cap = value.get<std::size_t>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "port") {
        config.port = value.get<std::uint16_t>();
      } else if (key == "expert_evaluations") {
        config.expert_evaluations = value.get<std::size_t>();
      } else if (key == "crowd_evaluations") {
        config.crowd_evaluations = value.get<std::size_t>();
      } else {
        throw ConfigError("tasker config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("tasker config: ") + e.what());
  }
  if (config.gate_threshold < 0.0 || config.gate_threshold > 1.0) {
    throw ConfigError("tasker config: gate_threshold must lie in [0, 1]");
  }
  if (config.assessment_sample == 0 || config.assessment_size == 0) {
    throw ConfigError("tasker config: assessment sizes must be positive");
  }
  return config;
}

TaskerConfig load_tasker_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open tasker config '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tasker_config(buf.str());
}

std::string to_json(const TaskerConfig& c) {
  json j{{"assessment_size", c.assessment_size},
         {"assessment_sample", c.assessment_sample},
         {"gate_threshold", c.gate_threshold},
         {"cap", c.cap},
         {"seed", c.seed},
         {"port", c.port},
         {"expert_evaluations", c.expert_evaluations},
         {"crowd_evaluations", c.crowd_evaluations}};
  return j.dump(2);
}

}  // namespace emolex::tasker
