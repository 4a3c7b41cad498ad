#include "emolex/corpus/dictionary.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "emolex/util/error.hpp"

namespace emolex::corpus {

namespace {

std::string normalize(std::string_view word) {
  while (!word.empty() && std::isspace(static_cast<unsigned char>(word.front()))) word.remove_prefix(1);
  while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.remove_suffix(1);
  std::string out(word);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Dictionary Dictionary::from_words(std::span<const std::string> words) {
  Dictionary dict;
  for (const auto& word : words) {
    auto normalized = normalize(word);
    if (!normalized.empty()) dict.words_.insert(std::move(normalized));
  }
  if (dict.words_.empty()) throw ConfigError("dictionary is empty");
  return dict;
}

Dictionary Dictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dictionary '" + path.string() + "'");
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) words.push_back(line);
  if (words.empty()) throw ConfigError("dictionary '" + path.string() + "' is empty");
  return from_words(words);
}

bool Dictionary::contains(std::string_view word) const {
  return words_.count(normalize(word)) != 0;
}

TermPartition validate_terms(std::span<const Term> terms, const Dictionary& dictionary) {
  if (dictionary.size() == 0) throw ConfigError("dictionary is empty");
  TermPartition out;
  for (Term term : terms) {
    term.valid = dictionary.contains(term.surface);
    (term.valid ? out.valid : out.invalid).push_back(std::move(term));
  }
  return out;
}

}  // namespace emolex::corpus
