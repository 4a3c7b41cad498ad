#include "emolex/lexicon/agreement.hpp"

#include <algorithm>

#include "emolex/util/error.hpp"

namespace emolex::lexicon {

AgreementAnalysis analyze_agreement(const SubclassCounts& counts) {
  if (total(counts) == 0) throw InvalidArgumentError("agreement analysis needs at least one annotation");

  AgreementAnalysis out;
  out.sorted = counts;
  std::sort(out.sorted.begin(), out.sorted.end());

  // Walk down from a_n while the sequence stays at the maximum.
  const auto top = out.sorted.back();
  std::size_t tied = 1;
  while (tied < kSubclassCount && out.sorted[kSubclassCount - 1 - tied] == top) ++tied;

  out.tied_max.reserve(tied);
  for (const auto s : kAllSubclasses) {
    if (counts[slot(s)] == top) out.tied_max.push_back(s);
  }
  out.subclass_agreement = tied >= 2;
  out.emotional_agreement =
      out.subclass_agreement && std::all_of(out.tied_max.begin(), out.tied_max.end(), is_emotion);
  return out;
}

}  // namespace emolex::lexicon
