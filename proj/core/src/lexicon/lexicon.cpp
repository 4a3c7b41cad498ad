#include "emolex/lexicon/lexicon.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "emolex/util/csv.hpp"
#include "emolex/util/error.hpp"

namespace emolex::lexicon {

std::string_view to_string(EntryClass c) noexcept {
  switch (c) {
    case EntryClass::emotion:
      return "emotion";
    case EntryClass::intensifying:
      return "intensifying";
    case EntryClass::none:
      return "none";
    case EntryClass::agreement:
      return "agreement";
  }
  return "none";
}

namespace {

std::optional<EntryClass> parse_entry_class(std::string_view name) {
  if (name == "agreement") return EntryClass::agreement;
  if (const auto c = parse_main_class(name)) return static_cast<EntryClass>(*c);
  return std::nullopt;
}

std::vector<std::string> header() {
  std::vector<std::string> cols{"stem", "terms"};
  for (const auto s : kAllSubclasses) cols.emplace_back(to_string(s));
  for (const char* c : {"total", "main_class", "majority_subclasses", "subclass_agreement",
                        "emotional_agreement", "dyad_kind", "dyad_name"}) {
    cols.emplace_back(c);
  }
  return cols;
}

}  // namespace

LexiconEntry make_entry(const corpus::TermGroup& group, const SubclassCounts& counts, const DyadTable& dyads) {
  LexiconEntry e;
  e.group_id = group.id;
  e.stem = group.stem;
  e.terms = group.terms;
  e.counts = counts;
  e.total = total(counts);
  e.agreement = analyze_agreement(counts);
  e.majority_subclasses = e.agreement.tied_max;
  if (e.majority_subclasses.size() == 1) {
    e.main_class = static_cast<EntryClass>(main_class_of(e.majority_subclasses.front()));
  } else {
    e.main_class = EntryClass::agreement;
  }
  if (e.agreement.emotional_agreement && e.majority_subclasses.size() == 2) {
    e.dyad = dyads.label(e.majority_subclasses[0], e.majority_subclasses[1]);
  }
  return e;
}

AggregateResult aggregate(std::span<const Annotation> annotations, std::span<const corpus::TermGroup> groups,
                          const DyadTable& dyads) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < groups.size(); ++i) index.emplace(groups[i].id, i);

  AggregateResult result;
  std::vector<SubclassCounts> tallies(groups.size(), SubclassCounts{});
  for (const auto& a : annotations) {
    if (a.phase != Phase::acquisition) continue;
    const auto it = index.find(a.group_id);
    if (it == index.end()) {
      ++result.unknown_group_annotations;
      continue;
    }
    ++tallies[it->second][slot(a.subclass)];
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (total(tallies[i]) == 0) {
      ++result.omitted_groups;
      continue;
    }
    result.entries.push_back(make_entry(groups[i], tallies[i], dyads));
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) { return a.stem < b.stem; });
  return result;
}

void write_lexicon_csv(std::ostream& out, std::span<const LexiconEntry> entries) {
  std::vector<const LexiconEntry*> ordered;
  ordered.reserve(entries.size());
  for (const auto& e : entries) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const LexiconEntry* a, const LexiconEntry* b) { return a->stem < b->stem; });

  csv::write_row(out, header());
  for (const auto* e : ordered) {
    std::vector<std::string> row{e->stem, csv::join(e->terms, ';')};
    for (const auto c : e->counts) row.push_back(std::to_string(c));
    std::vector<std::string> majority;
    for (const auto s : e->majority_subclasses) majority.emplace_back(to_string(s));
    row.push_back(std::to_string(e->total));
    row.emplace_back(to_string(e->main_class));
    row.push_back(csv::join(majority, ';'));
    row.emplace_back(e->agreement.subclass_agreement ? "true" : "false");
    row.emplace_back(e->agreement.emotional_agreement ? "true" : "false");
    row.emplace_back(e->dyad ? to_string(e->dyad->kind) : "");
    row.emplace_back(e->dyad && e->dyad->name ? *e->dyad->name : "");
    csv::write_row(out, row);
  }
}

std::vector<LexiconEntry> read_lexicon_csv(std::istream& in) {
  const auto expected = header();
  const auto head = csv::read_row(in);
  if (!head || *head != expected) throw InvalidArgumentError("lexicon CSV: unexpected header");

  std::vector<LexiconEntry> entries;
  std::size_t line = 1;
  while (auto row = csv::read_row(in)) {
    ++line;
    if (row->size() == 1 && row->front().empty()) continue;
    if (row->size() != expected.size()) {
      throw InvalidArgumentError("lexicon CSV line " + std::to_string(line) + ": wrong column count");
    }
    const auto& r = *row;
    corpus::TermGroup group;
    group.id = r[0];
    group.stem = r[0];
    group.terms = csv::split(r[1], ';');
    SubclassCounts counts{};
    try {
      for (std::size_t i = 0; i < kSubclassCount; ++i) counts[i] = static_cast<std::uint32_t>(std::stoul(r[2 + i]));
    } catch (const std::exception&) {
      throw InvalidArgumentError("lexicon CSV line " + std::to_string(line) + ": bad count");
    }
    auto entry = make_entry(group, counts);
    const auto declared_class = parse_entry_class(r[14]);
    if (!declared_class || *declared_class != entry.main_class ||
        std::to_string(entry.total) != r[13]) {
      throw InvalidArgumentError("lexicon CSV line " + std::to_string(line) + ": derived columns disagree with counts");
    }
    if (entry.dyad) {
      if (r[19].empty()) {
        entry.dyad->name.reset();
      } else {
        entry.dyad->name = r[19];
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace emolex::lexicon
