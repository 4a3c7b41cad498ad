#include "emolex/corpus/term_groups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>

#include "emolex/corpus/porter_stemmer.hpp"
#include "emolex/util/csv.hpp"
#include "emolex/util/error.hpp"

namespace emolex::corpus {

std::string dictionary_link(std::string_view link_base, std::string_view term) {
  std::string out(link_base);
  for (unsigned char c : term) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    }
  }
  return out;
}

std::vector<TermGroup> group_by_stem(std::span<const Term> valid_terms, std::string_view link_base) {
  std::map<std::string, TermGroup> by_stem;
  for (const auto& term : valid_terms) {
    auto stem = porter_stem(term.surface);
    auto& group = by_stem[stem];
    if (group.stem.empty()) {
      group.id = stem;
      group.stem = stem;
    }
    group.terms.push_back(term.surface);
    group.total_frequency += term.frequency;
  }
  std::vector<TermGroup> groups;
  groups.reserve(by_stem.size());
  for (auto& [stem, group] : by_stem) {
    std::sort(group.terms.begin(), group.terms.end());
    group.terms.erase(std::unique(group.terms.begin(), group.terms.end()), group.terms.end());
    group.dictionary_link = dictionary_link(link_base, group.terms.front());
    groups.push_back(std::move(group));
  }
  return groups;
}

void write_term_groups(std::ostream& out, std::span<const TermGroup> groups) {
  csv::write_row(out, {"group_id", "stem", "terms", "total_frequency"});
  for (const auto& g : groups) {
    csv::write_row(out, {g.id, g.stem, csv::join(g.terms, ';'), std::to_string(g.total_frequency)});
  }
}

std::vector<TermGroup> read_term_groups(std::istream& in, std::string_view link_base) {
  const auto header = csv::read_row(in);
  if (!header || header->size() != 4 || (*header)[0] != "group_id") {
    throw InvalidArgumentError("term group listing: unexpected header");
  }
  std::vector<TermGroup> groups;
  std::size_t line = 1;
  while (auto row = csv::read_row(in)) {
    ++line;
    if (row->size() == 1 && row->front().empty()) continue;
    if (row->size() != 4) {
      throw InvalidArgumentError("term group listing line " + std::to_string(line) + ": expected 4 columns");
    }
    TermGroup g;
    g.id = (*row)[0];
    g.stem = (*row)[1];
    g.terms = csv::split((*row)[2], ';');
    if (g.id.empty() || g.terms.empty()) {
      throw InvalidArgumentError("term group listing line " + std::to_string(line) + ": empty group");
    }
    g.total_frequency = std::stoull((*row)[3]);
    g.dictionary_link = dictionary_link(link_base, g.terms.front());
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace emolex::corpus
