#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "emolex/model/subclass.hpp"

namespace emolex::lexicon {

enum class DyadKind { combination, opposition };
std::string_view to_string(DyadKind kind) noexcept;

/// An unordered pair of distinct emotions, stored lower subclass index first.
struct DyadLabel {
  Subclass first = Subclass::joy;
  Subclass second = Subclass::trust;
  DyadKind kind = DyadKind::combination;
  std::optional<std::string> name;

  friend bool operator==(const DyadLabel&, const DyadLabel&) = default;
};

/// Circumplex oppositions are fixed: sadness-joy, anger-fear,
/// surprise-anticipation, disgust-trust. Combination names default to
/// trust+joy love, joy+anticipation optimism, surprise+joy delight,
/// fear+joy guilt, and can be extended from a JSON name table.
class DyadTable {
 public:
  static DyadTable defaults();
  /// JSON: [{"pair": ["trust", "fear"], "name": "submission"}, ...]. Entries
  /// are merged over the defaults; naming an opposition pair is rejected.
  static DyadTable load(const std::filesystem::path& path);
  static DyadTable parse(std::string_view json_text);

  /// Throws InvalidArgumentError unless `a` and `b` are distinct emotions.
  DyadLabel label(Subclass a, Subclass b) const;

  static bool is_opposition(Subclass a, Subclass b);

 private:
  std::map<std::pair<Subclass, Subclass>, std::string> names_;
};

DyadLabel dyad_label(Subclass a, Subclass b);

}  // namespace emolex::lexicon
