#pragma once

#include <cstdint>
#include <span>

namespace emolex::corpus {

struct ZipfFit {
  double exponent = 0.0;   // slope magnitude `a` in freq ~ C / rank^a
  double intercept = 0.0;  // log C
  double r_squared = 0.0;
};

/// Least-squares fit of log(frequency) against log(rank), ranks assigned by
/// descending frequency. Requires at least 10 terms (InsufficientDataError).
ZipfFit zipf_fit(std::span<const std::uint64_t> frequencies);

}  // namespace emolex::corpus
