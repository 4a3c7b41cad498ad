#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/corpus/post.hpp"

namespace emolex::corpus {

/// Splits social-media text into lowercase unigrams.
///
/// Rules, applied per whitespace-separated chunk:
///  - chunks starting with `http://`, `https://` or `www.` are URLs and dropped;
///  - leading `#` and `@` sigils are stripped;
///  - ASCII punctuation is trimmed from both edges (inner apostrophes and
///    hyphens survive, e.g. "don't");
///  - empty results are dropped.
/// Numerals and single characters are kept; dictionary validation rejects them.
std::vector<std::string> tokenize(std::string_view text);

struct Term {
  std::string surface;
  std::uint64_t frequency = 0;
  bool valid = false;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Tokenizes every post and returns the distinct terms with corpus frequency,
/// sorted by surface.
std::vector<Term> count_terms(std::span<const Post> posts);

}  // namespace emolex::corpus
