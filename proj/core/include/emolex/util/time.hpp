#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

namespace emolex {

using Timestamp = std::chrono::sys_seconds;
using Clock = std::function<Timestamp()>;

/// Parses `YYYY-MM-DDTHH:MM:SSZ` (UTC only). Throws InvalidArgumentError.
Timestamp parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp ts);

Clock system_clock();

/// Deterministic clock for simulations and tests: returns `start`, then
/// advances by `step` on every call.
Clock stepping_clock(Timestamp start, std::chrono::seconds step);

}  // namespace emolex
