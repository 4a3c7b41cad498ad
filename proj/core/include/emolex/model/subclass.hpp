#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace emolex {

/// The eleven annotation options, in their fixed index order (1-based index
/// j: emotions 1-8, intensifying 9-10, none 11).
enum class Subclass : std::uint8_t {
  joy,
  trust,
  fear,
  surprise,
  sadness,
  disgust,
  anger,
  anticipation,
  amplifying,
  weakening,
  none,
};

enum class MainClass : std::uint8_t { emotion, intensifying, none };

inline constexpr std::size_t kSubclassCount = 11;
inline constexpr std::size_t kEmotionCount = 8;

inline constexpr std::array<Subclass, kSubclassCount> kAllSubclasses{
    Subclass::joy,          Subclass::trust,      Subclass::fear,      Subclass::surprise,
    Subclass::sadness,      Subclass::disgust,    Subclass::anger,     Subclass::anticipation,
    Subclass::amplifying,   Subclass::weakening,  Subclass::none,
};

inline constexpr std::array<Subclass, kEmotionCount> kEmotions{
    Subclass::joy,     Subclass::trust,   Subclass::fear,  Subclass::surprise,
    Subclass::sadness, Subclass::disgust, Subclass::anger, Subclass::anticipation,
};

/// Zero-based slot used by count arrays.
constexpr std::size_t slot(Subclass s) noexcept { return static_cast<std::size_t>(s); }
/// One-based index j in [1, 11].
constexpr int subclass_index(Subclass s) noexcept { return static_cast<int>(s) + 1; }

constexpr bool is_emotion(Subclass s) noexcept { return slot(s) < kEmotionCount; }

constexpr MainClass main_class_of(Subclass s) noexcept {
  if (is_emotion(s)) return MainClass::emotion;
  if (s == Subclass::none) return MainClass::none;
  return MainClass::intensifying;
}

std::string_view to_string(Subclass s) noexcept;
std::string_view to_string(MainClass c) noexcept;
std::optional<Subclass> parse_subclass(std::string_view name) noexcept;
std::optional<MainClass> parse_main_class(std::string_view name) noexcept;

using SubclassCounts = std::array<std::uint32_t, kSubclassCount>;

std::uint64_t total(const SubclassCounts& counts) noexcept;

}  // namespace emolex
