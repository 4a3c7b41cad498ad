#include "emolex/lexicon/dyads.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "emolex/util/error.hpp"

namespace emolex::lexicon {

namespace {

std::pair<Subclass, Subclass> ordered(Subclass a, Subclass b) {
  return slot(a) < slot(b) ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

std::string_view to_string(DyadKind kind) noexcept {
  return kind == DyadKind::combination ? "combination" : "opposition";
}

bool DyadTable::is_opposition(Subclass a, Subclass b) {
  static const std::pair<Subclass, Subclass> kOpposites[] = {
      ordered(Subclass::sadness, Subclass::joy),
      ordered(Subclass::anger, Subclass::fear),
      ordered(Subclass::surprise, Subclass::anticipation),
      ordered(Subclass::disgust, Subclass::trust),
  };
  const auto key = ordered(a, b);
  for (const auto& pair : kOpposites) {
    if (pair == key) return true;
  }
  return false;
}

DyadTable DyadTable::defaults() {
  DyadTable table;
  table.names_[ordered(Subclass::trust, Subclass::joy)] = "love";
  table.names_[ordered(Subclass::joy, Subclass::anticipation)] = "optimism";
  table.names_[ordered(Subclass::surprise, Subclass::joy)] = "delight";
  table.names_[ordered(Subclass::fear, Subclass::joy)] = "guilt";
  return table;
}

DyadTable DyadTable::parse(std::string_view json_text) {
  auto table = defaults();
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_array()) throw ConfigError("dyad name table must be a JSON array");
    for (const auto& entry : j) {
      const auto& pair = entry.at("pair");
      if (!pair.is_array() || pair.size() != 2) throw ConfigError("dyad pair must list two emotions");
      const auto a = parse_subclass(pair[0].get<std::string>());
      const auto b = parse_subclass(pair[1].get<std::string>());
      if (!a || !b || !is_emotion(*a) || !is_emotion(*b) || *a == *b) {
        throw ConfigError("dyad pair must name two distinct emotions");
      }
      if (is_opposition(*a, *b)) throw ConfigError("opposition dyads cannot be renamed");
      table.names_[ordered(*a, *b)] = entry.at("name").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("dyad name table: ") + e.what());
  }
  return table;
}

DyadTable DyadTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dyad name table '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

DyadLabel DyadTable::label(Subclass a, Subclass b) const {
  if (!is_emotion(a) || !is_emotion(b) || a == b) {
    throw InvalidArgumentError("a dyad needs two distinct emotions");
  }
  const auto key = ordered(a, b);
  DyadLabel out;
  out.first = key.first;
  out.second = key.second;
  if (is_opposition(a, b)) {
    out.kind = DyadKind::opposition;
  } else if (const auto it = names_.find(key); it != names_.end()) {
    out.name = it->second;
  }
  return out;
}

DyadLabel dyad_label(Subclass a, Subclass b) {
  static const DyadTable table = DyadTable::defaults();
  return table.label(a, b);
}

}  // namespace emolex::lexicon
