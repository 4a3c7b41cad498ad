#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/corpus/tokenizer.hpp"

namespace emolex::corpus {

inline constexpr std::string_view kDefaultDictionaryLinkBase =
    "https://dictionary.cambridge.org/dictionary/english/";

/// A stem with its member terms; the unit of annotation. The group id is the
/// stem itself, which is unique by construction and stable across runs.
struct TermGroup {
  std::string id;
  std::string stem;
  std::vector<std::string> terms;  // sorted, unique
  std::uint64_t total_frequency = 0;
  std::string dictionary_link;

  friend bool operator==(const TermGroup&, const TermGroup&) = default;
};

/// Groups validated terms by Porter stem. Output is sorted by stem.
std::vector<TermGroup> group_by_stem(std::span<const Term> valid_terms,
                                     std::string_view link_base = kDefaultDictionaryLinkBase);

/// CSV columns: group_id, stem, terms (';'-joined), total_frequency.
void write_term_groups(std::ostream& out, std::span<const TermGroup> groups);
std::vector<TermGroup> read_term_groups(std::istream& in,
                                        std::string_view link_base = kDefaultDictionaryLinkBase);

std::string dictionary_link(std::string_view link_base, std::string_view term);

}  // namespace emolex::corpus
