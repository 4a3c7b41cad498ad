#include "emolex/evalkit/summary.hpp"

#include <algorithm>

#include "emolex/util/error.hpp"

namespace emolex::evalkit {

std::vector<SummaryShare> summary_shares(const SubclassCounts& counts) {
  const auto sum = total(counts);
  if (sum == 0) throw InvalidArgumentError("summary needs at least one annotation");

  std::vector<SummaryShare> shares;
  std::vector<std::uint64_t> remainders;
  std::uint64_t assigned = 0;
  for (const auto s : kAllSubclasses) {
    const auto c = counts[slot(s)];
    if (c == 0) continue;
    const std::uint64_t scaled = 10000ULL * c;
    shares.push_back({s, c, static_cast<std::uint32_t>(scaled / sum)});
    remainders.push_back(scaled % sum);
    assigned += scaled / sum;
  }
  std::vector<std::size_t> order(shares.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t k = 0; assigned < 10000; ++k, ++assigned) ++shares[order[k]].hundredths;

  std::stable_sort(shares.begin(), shares.end(),
                   [](const SummaryShare& a, const SummaryShare& b) { return a.count > b.count; });
  return shares;
}

std::string format_percentage(std::uint32_t hundredths) {
  std::string out = std::to_string(hundredths / 100) + ".";
  const auto frac = hundredths % 100;
  out += static_cast<char>('0' + frac / 10);
  if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
  return out;
}

std::string render_summary(std::span<const std::string> terms, const SubclassCounts& counts) {
  std::string out = "The term group \"";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ' ';
    out += terms[i];
  }
  out += "\" received annotations as ";
  const auto shares = summary_shares(counts);
  for (std::size_t i = 0; i < shares.size(); ++i) {
    if (i) out += ", ";
    out += format_percentage(shares[i].hundredths);
    out += "% ";
    out += to_string(shares[i].subclass);
  }
  out += '.';
  return out;
}

std::string render_summary(const lexicon::LexiconEntry& entry) {
  return render_summary(entry.terms, entry.counts);
}

}  // namespace emolex::evalkit
