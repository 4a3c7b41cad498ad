#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/evalkit/records.hpp"
#include "emolex/lexicon/lexicon.hpp"

namespace emolex::evalkit {

enum class Facet { count, percent, subclass, agreement };
inline constexpr Facet kAllFacets[] = {Facet::count, Facet::percent, Facet::subclass, Facet::agreement};
std::string_view to_string(Facet facet) noexcept;
std::optional<Facet> parse_facet(std::string_view name) noexcept;

/// Bucket label of an entry under a facet:
///   count      majority subclass annotation count ("3")
///   percent    majority share rounded to a whole percent ("67")
///   subclass   the unique majority subclass, or "agreement" on a tie
///   agreement  number of subclasses tied at the maximum ("2")
std::string facet_bucket(const lexicon::LexiconEntry& entry, Facet facet);

struct ValidityRow {
  Facet facet = Facet::count;
  std::string bucket;
  EvaluatorKind evaluator_kind = EvaluatorKind::expert;
  double mean = 0.0;
  std::size_t n = 0;
};

/// Mean validity score per facet bucket and evaluator kind. Rows come out
/// by facet, then bucket (numeric buckets numerically, subclasses by index
/// with "agreement" last), then expert before crowd. Intensifier records are
/// ignored. Throws InvalidArgumentError when there is no validity record or
/// a record names a group missing from `entries`.
std::vector<ValidityRow> validity_report(std::span<const EvaluationRecord> records,
                                         std::span<const lexicon::LexiconEntry> entries,
                                         std::optional<Facet> only = std::nullopt);

enum class Level { low, mid, high };
std::string_view to_string(Level level) noexcept;

struct AgreementLevel {
  EvaluatorKind population = EvaluatorKind::expert;
  Level level = Level::low;
  std::uint32_t required_valid = 0;
};

/// Experts: low 1/2, high 2/2. Crowd: low 2/4, mid 3/4, high 4/4.
const std::vector<AgreementLevel>& agreement_levels();
std::uint32_t required_records(EvaluatorKind kind) noexcept;

struct IntensifierRow {
  AgreementLevel level;
  double fraction = 0.0;
  std::size_t groups = 0;
};

/// Fraction of groups meeting each agreement level, per evaluator kind that
/// has any intensifier record. Throws InvalidArgumentError listing every
/// group whose record count differs from the required multiplicity.
std::vector<IntensifierRow> intensifier_report(std::span<const EvaluationRecord> records);

/// Both reports share the columns facet, bucket, evaluator_kind,
/// mean_or_fraction, n. Intensifier rows use facet "intensifier" and the
/// level name as bucket.
void write_validity_report(std::ostream& out, std::span<const ValidityRow> rows);
void write_intensifier_report(std::ostream& out, std::span<const IntensifierRow> rows);

}  // namespace emolex::evalkit
