#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/corpus/term_groups.hpp"
#include "emolex/lexicon/agreement.hpp"
#include "emolex/lexicon/dyads.hpp"
#include "emolex/model/annotation.hpp"

namespace emolex::lexicon {

/// Dominant class of an entry: the main class of its unique majority
/// subclass, or `agreement` when two or more subclasses tie at the top.
enum class EntryClass { emotion, intensifying, none, agreement };
std::string_view to_string(EntryClass c) noexcept;

struct LexiconEntry {
  std::string group_id;
  std::string stem;
  std::vector<std::string> terms;
  SubclassCounts counts{};
  std::uint64_t total = 0;
  EntryClass main_class = EntryClass::none;
  std::vector<Subclass> majority_subclasses;
  AgreementAnalysis agreement;
  std::optional<DyadLabel> dyad;  // set for emotional agreement between exactly two emotions
};

LexiconEntry make_entry(const corpus::TermGroup& group, const SubclassCounts& counts,
                        const DyadTable& dyads = DyadTable::defaults());

struct AggregateResult {
  std::vector<LexiconEntry> entries;  // sorted by stem
  std::size_t omitted_groups = 0;     // groups with no retained acquisition annotations
  std::size_t unknown_group_annotations = 0;
};

/// Tallies acquisition-phase annotations per group. `annotations` must
/// already exclude filtered workers; other phases are ignored.
AggregateResult aggregate(std::span<const Annotation> annotations, std::span<const corpus::TermGroup> groups,
                          const DyadTable& dyads = DyadTable::defaults());

/// Columns: stem, terms, the 11 subclass counts, total, main_class,
/// majority_subclasses, subclass_agreement, emotional_agreement, dyad_kind,
/// dyad_name. Rows ordered by stem.
void write_lexicon_csv(std::ostream& out, std::span<const LexiconEntry> entries);
std::vector<LexiconEntry> read_lexicon_csv(std::istream& in);

}  // namespace emolex::lexicon
