#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "emolex/corpus/tokenizer.hpp"

namespace emolex::corpus {

/// Newline-delimited word list; membership is case-insensitive.
class Dictionary {
 public:
  /// Throws ConfigError if no words remain after trimming blank lines.
  static Dictionary from_words(std::span<const std::string> words);
  /// Throws ConfigError when the file is missing/unreadable or empty.
  static Dictionary load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  Dictionary() = default;
  std::unordered_set<std::string> words_;
};

struct TermPartition {
  std::vector<Term> valid;
  std::vector<Term> invalid;
};

/// Exhaustive, disjoint split of `terms`; `valid` flags are set on the output copies.
TermPartition validate_terms(std::span<const Term> terms, const Dictionary& dictionary);

}  // namespace emolex::corpus
