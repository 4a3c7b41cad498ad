#include "emolex/reliability/fleiss.hpp"

#include <numeric>

#include "emolex/util/csv.hpp"
#include "emolex/util/error.hpp"

namespace emolex::reliability {

double fleiss_kappa(const RatingMatrix& items) {
  if (items.empty()) throw InvalidArgumentError("fleiss kappa needs at least one item");
  const std::size_t categories = items.front().size();
  if (categories == 0) throw InvalidArgumentError("fleiss kappa needs at least one category");
  const std::uint64_t n = std::accumulate(items.front().begin(), items.front().end(), std::uint64_t{0});
  if (n < 2) throw InvalidArgumentError("fleiss kappa needs at least two ratings per item");

  std::vector<std::uint64_t> column(categories, 0);
  double agreement_sum = 0.0;
  for (const auto& row : items) {
    if (row.size() != categories) throw InvalidArgumentError("fleiss kappa: ragged rating matrix");
    std::uint64_t row_total = 0;
    std::uint64_t pairs = 0;
    for (std::size_t j = 0; j < categories; ++j) {
      row_total += row[j];
      pairs += static_cast<std::uint64_t>(row[j]) * (row[j] == 0 ? 0 : row[j] - 1);
      column[j] += row[j];
    }
    if (row_total != n) throw InvalidArgumentError("fleiss kappa: items have unequal rating counts");
    agreement_sum += static_cast<double>(pairs) / static_cast<double>(n * (n - 1));
  }

  const double item_count = static_cast<double>(items.size());
  const double ratings = item_count * static_cast<double>(n);
  const double p_bar = agreement_sum / item_count;
  double p_e = 0.0;
  for (const auto c : column) {
    const double p = static_cast<double>(c) / ratings;
    p_e += p * p;
  }
  if (1.0 - p_e <= 1e-15) {
    if (p_bar >= 1.0 - 1e-12) return 1.0;
    throw UndefinedValueError("fleiss kappa undefined: chance agreement is 1");
  }
  return (p_bar - p_e) / (1.0 - p_e);
}

KappaByStratum kappa_by_stratum(std::span<const lexicon::LexiconEntry> entries) {
  std::map<std::size_t, RatingMatrix> subclass_strata;
  std::map<std::size_t, RatingMatrix> emotion_strata;
  KappaByStratum out;

  for (const auto& e : entries) {
    if (e.total >= kMinStratum && e.total <= kMaxStratum) {
      subclass_strata[e.total].emplace_back(e.counts.begin(), e.counts.end());
    } else {
      ++out.outside[e.total];
    }
    std::vector<std::uint32_t> emotions(e.counts.begin(), e.counts.begin() + kEmotionCount);
    const auto remaining = std::accumulate(emotions.begin(), emotions.end(), std::size_t{0});
    if (remaining >= kMinStratum && remaining <= kMaxStratum) {
      emotion_strata[remaining].push_back(std::move(emotions));
    }
  }

  for (std::size_t n = kMinStratum; n <= kMaxStratum; ++n) {
    const auto s = subclass_strata.find(n);
    const auto m = emotion_strata.find(n);
    if (s == subclass_strata.end() && m == emotion_strata.end()) {
      out.notices.push_back("stratum " + std::to_string(n) + " has no items; omitted");
      continue;
    }
    KappaReport report;
    report.total_annotations = n;
    if (s != subclass_strata.end()) {
      report.items = s->second.size();
      report.subclass_k = fleiss_kappa(s->second);
    } else {
      out.notices.push_back("stratum " + std::to_string(n) + " has no items over all subclasses");
    }
    if (m != emotion_strata.end()) {
      report.emotional_items = m->second.size();
      report.emotional_k = fleiss_kappa(m->second);
    }
    out.reports.push_back(report);
  }
  return out;
}

void write_kappa_report(std::ostream& out, const KappaByStratum& report) {
  csv::write_row(out, {"total_annotations", "subclass_k", "emotional_k", "items", "emotional_items",
                       "emotional_basis"});
  for (const auto& r : report.reports) {
    csv::write_row(out, {std::to_string(r.total_annotations),
                         r.subclass_k ? csv::format_real(*r.subclass_k, 6) : "",
                         r.emotional_k ? csv::format_real(*r.emotional_k, 6) : "", std::to_string(r.items),
                         std::to_string(r.emotional_items), "emotion_annotation_count"});
  }
}

}  // namespace emolex::reliability
