#include "emolex/util/time.hpp"

#include <cstdio>
#include <memory>

#include "emolex/util/error.hpp"

namespace emolex {

Timestamp parse_timestamp(std::string_view text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  char tail = 0;
  const std::string buf(text);
  if (std::sscanf(buf.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &y, &mo, &d, &h, &mi, &s, &tail) != 7 ||
      tail != 'Z' || buf.size() != 20) {
    throw InvalidArgumentError("timestamp must be UTC ISO-8601 'YYYY-MM-DDTHH:MM:SSZ': '" + buf + "'");
  }
  using namespace std::chrono;
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) {
    throw InvalidArgumentError("timestamp out of range: '" + buf + "'");
  }
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
}

std::string format_timestamp(Timestamp ts) {
  using namespace std::chrono;
  const auto day_point = floor<days>(ts);
  const year_month_day ymd{day_point};
  const hh_mm_ss hms{ts - day_point};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ldZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<long>(hms.hours().count()), static_cast<long>(hms.minutes().count()),
                static_cast<long>(hms.seconds().count()));
  return buf;
}

Clock system_clock() {
  return [] { return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()); };
}

Clock stepping_clock(Timestamp start, std::chrono::seconds step) {
  auto next = std::make_shared<Timestamp>(start);
  return [next, step] {
    const Timestamp now = *next;
    *next += step;
    return now;
  };
}

}  // namespace emolex
