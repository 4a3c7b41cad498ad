#include "emolex/evalkit/reports.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

#include "emolex/util/csv.hpp"
#include "emolex/util/error.hpp"

namespace emolex::evalkit {

namespace {

// Sort key of a bucket within its facet.
int bucket_key(const lexicon::LexiconEntry& entry, Facet facet) {
  const auto& a = entry.agreement;
  switch (facet) {
    case Facet::count:
      return static_cast<int>(a.max_count());
    case Facet::percent:
      return static_cast<int>((200ULL * a.max_count() + entry.total) / (2ULL * entry.total));
    case Facet::subclass:
      return a.tied_max.size() == 1 ? static_cast<int>(subclass_index(a.tied_max.front())) : 100;
    case Facet::agreement:
      return static_cast<int>(a.tied_max.size());
  }
  return 0;
}

const std::vector<std::string> kHeader{"facet", "bucket", "evaluator_kind", "mean_or_fraction", "n"};

}  // namespace

std::string_view to_string(Facet facet) noexcept {
  switch (facet) {
    case Facet::count: return "count";
    case Facet::percent: return "percent";
    case Facet::subclass: return "subclass";
    case Facet::agreement: return "agreement";
  }
  return "?";
}

std::optional<Facet> parse_facet(std::string_view name) noexcept {
  for (const auto f : kAllFacets) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string facet_bucket(const lexicon::LexiconEntry& entry, Facet facet) {
  if (facet == Facet::subclass) {
    const auto& tied = entry.agreement.tied_max;
    return tied.size() == 1 ? std::string(to_string(tied.front())) : "agreement";
  }
  return std::to_string(bucket_key(entry, facet));
}

std::vector<ValidityRow> validity_report(std::span<const EvaluationRecord> records,
                                         std::span<const lexicon::LexiconEntry> entries,
                                         std::optional<Facet> only) {
  std::unordered_map<std::string_view, const lexicon::LexiconEntry*> by_id;
  for (const auto& e : entries) by_id.emplace(e.group_id, &e);

  struct Cell {
    std::string bucket;
    long sum = 0;
    std::size_t n = 0;
  };
  std::map<std::tuple<int, int, int>, Cell> cells;
  std::size_t seen = 0;
  for (const auto& r : records) {
    if (r.kind != EvaluationKind::validity) continue;
    validate(r);
    const auto it = by_id.find(r.group_id);
    if (it == by_id.end()) throw InvalidArgumentError("validity record for unknown group '" + r.group_id + "'");
    ++seen;
    for (const auto f : kAllFacets) {
      if (only && *only != f) continue;
      auto& cell = cells[{static_cast<int>(f), bucket_key(*it->second, f), static_cast<int>(r.evaluator_kind)}];
      if (cell.n == 0) cell.bucket = facet_bucket(*it->second, f);
      cell.sum += *r.score;
      ++cell.n;
    }
  }
  if (seen == 0) throw InvalidArgumentError("validity report needs at least one validity record");

  std::vector<ValidityRow> rows;
  rows.reserve(cells.size());
  for (const auto& [key, cell] : cells) {
    rows.push_back({static_cast<Facet>(std::get<0>(key)), cell.bucket,
                    static_cast<EvaluatorKind>(std::get<2>(key)),
                    static_cast<double>(cell.sum) / static_cast<double>(cell.n), cell.n});
  }
  return rows;
}

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::low: return "low";
    case Level::mid: return "mid";
    case Level::high: return "high";
  }
  return "?";
}

const std::vector<AgreementLevel>& agreement_levels() {
  static const std::vector<AgreementLevel> levels{
      {EvaluatorKind::expert, Level::low, 1},
      {EvaluatorKind::expert, Level::high, 2},
      {EvaluatorKind::crowd, Level::low, 2},
      {EvaluatorKind::crowd, Level::mid, 3},
      {EvaluatorKind::crowd, Level::high, 4},
  };
  return levels;
}

std::uint32_t required_records(EvaluatorKind kind) noexcept { return kind == EvaluatorKind::expert ? 2 : 4; }

std::vector<IntensifierRow> intensifier_report(std::span<const EvaluationRecord> records) {
  struct Tally {
    std::uint32_t records = 0;
    std::uint32_t valid = 0;
  };
  std::map<std::pair<EvaluatorKind, std::string>, Tally> tallies;
  for (const auto& r : records) {
    if (r.kind != EvaluationKind::intensifier) continue;
    validate(r);
    auto& t = tallies[{r.evaluator_kind, r.group_id}];
    ++t.records;
    if (*r.intensifier_valid) ++t.valid;
  }

  std::string problems;
  for (const auto& [key, t] : tallies) {
    const auto need = required_records(key.first);
    if (t.records == need) continue;
    if (!problems.empty()) problems += "; ";
    problems += std::string(to_string(key.first)) + " group '" + key.second + "' has " + std::to_string(t.records) +
                " records, expected " + std::to_string(need);
  }
  if (!problems.empty()) throw InvalidArgumentError("wrong intensifier record multiplicity: " + problems);

  std::vector<IntensifierRow> rows;
  for (const auto& level : agreement_levels()) {
    std::size_t groups = 0;
    std::size_t meeting = 0;
    for (const auto& [key, t] : tallies) {
      if (key.first != level.population) continue;
      ++groups;
      if (t.valid >= level.required_valid) ++meeting;
    }
    if (groups == 0) continue;
    rows.push_back({level, static_cast<double>(meeting) / static_cast<double>(groups), groups});
  }
  return rows;
}

void write_validity_report(std::ostream& out, std::span<const ValidityRow> rows) {
  csv::write_row(out, kHeader);
  for (const auto& r : rows) {
    csv::write_row(out, {std::string(to_string(r.facet)), r.bucket, std::string(to_string(r.evaluator_kind)),
                         csv::format_real(r.mean, 4), std::to_string(r.n)});
  }
}

void write_intensifier_report(std::ostream& out, std::span<const IntensifierRow> rows) {
  csv::write_row(out, kHeader);
  for (const auto& r : rows) {
    csv::write_row(out, {"intensifier", std::string(to_string(r.level.level)),
                         std::string(to_string(r.level.population)), csv::format_real(r.fraction, 4),
                         std::to_string(r.groups)});
  }
}

}  // namespace emolex::evalkit
