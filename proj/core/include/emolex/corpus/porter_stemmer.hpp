#pragma once

#include <string>
#include <string_view>

namespace emolex::corpus {

/// Porter (1980) suffix-stripping stemmer, as published: no length-2 cutoff
/// and none of the later `bli`/`logi` departures. Input must be a lowercase
/// unigram; bytes outside a-z are treated as consonants.
///
/// Note the algorithm is not idempotent in general (e.g. "agreed" -> "agre"
/// -> "agr"); grouping only ever stems surface terms once.
std::string porter_stem(std::string_view word);

}  // namespace emolex::corpus
