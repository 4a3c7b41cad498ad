#include "emolex/model/subclass.hpp"

#include <numeric>

namespace emolex {

namespace {

constexpr std::array<std::string_view, kSubclassCount> kNames{
    "joy",     "trust", "fear",  "surprise",   "sadness",   "disgust",
    "anger",   "anticipation", "amplifying", "weakening", "none",
};

}  // namespace

std::string_view to_string(Subclass s) noexcept { return kNames[slot(s)]; }

std::string_view to_string(MainClass c) noexcept {
  switch (c) {
    case MainClass::emotion:
      return "emotion";
    case MainClass::intensifying:
      return "intensifying";
    case MainClass::none:
      return "none";
  }
  return "none";
}

std::optional<Subclass> parse_subclass(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllSubclasses[i];
  }
  return std::nullopt;
}

std::optional<MainClass> parse_main_class(std::string_view name) noexcept {
  if (name == "emotion") return MainClass::emotion;
  if (name == "intensifying") return MainClass::intensifying;
  if (name == "none") return MainClass::none;
  return std::nullopt;
}

std::uint64_t total(const SubclassCounts& counts) noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

}  // namespace emolex
