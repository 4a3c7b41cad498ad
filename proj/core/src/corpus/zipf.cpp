#include "emolex/corpus/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "emolex/util/error.hpp"

namespace emolex::corpus {

ZipfFit zipf_fit(std::span<const std::uint64_t> frequencies) {
  if (frequencies.size() < 10) {
    throw InsufficientDataError("zipf fit needs at least 10 distinct terms, got " +
                                std::to_string(frequencies.size()));
  }
  std::vector<std::uint64_t> sorted(frequencies.begin(), frequencies.end());
  if (std::any_of(sorted.begin(), sorted.end(), [](auto f) { return f == 0; })) {
    throw InvalidArgumentError("zipf fit: frequencies must be positive");
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  const auto n = static_cast<double>(sorted.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double x = std::log(static_cast<double>(i + 1));
    const double y = std::log(static_cast<double>(sorted[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double cov = sxy - sx * sy / n;
  const double var_x = sxx - sx * sx / n;
  const double var_y = syy - sy * sy / n;
  const double slope = cov / var_x;

  ZipfFit fit;
  fit.exponent = std::fabs(slope);
  fit.intercept = (sy - slope * sx) / n;
  fit.r_squared = var_y > 0 ? (cov * cov) / (var_x * var_y) : 1.0;
  return fit;
}

}  // namespace emolex::corpus
