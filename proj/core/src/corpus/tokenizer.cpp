#include "emolex/corpus/tokenizer.hpp"

#include <cctype>
#include <map>

namespace emolex::corpus {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

bool starts_with_ci(std::string_view text, std::string_view prefix) {
  if (text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[i])) != prefix[i]) return false;
  }
  return true;
}

bool is_url(std::string_view chunk) {
  return starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
         starts_with_ci(chunk, "www.");
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view chunk = text.substr(pos, end - pos);
    pos = end;
    if (chunk.empty() || is_url(chunk)) continue;

    while (!chunk.empty() && (chunk.front() == '#' || chunk.front() == '@')) chunk.remove_prefix(1);
    while (!chunk.empty() && is_punct(chunk.front())) chunk.remove_prefix(1);
    while (!chunk.empty() && is_punct(chunk.back())) chunk.remove_suffix(1);
    if (chunk.empty()) continue;

    std::string token(chunk);
    for (auto& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<Term> count_terms(std::span<const Post> posts) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& post : posts) {
    for (auto& token : tokenize(post.text)) ++counts[std::move(token)];
  }
  std::vector<Term> terms;
  terms.reserve(counts.size());
  for (auto& [surface, frequency] : counts) terms.push_back({surface, frequency, false});
  return terms;
}

}  // namespace emolex::corpus
