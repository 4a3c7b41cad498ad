#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace emolex::csv {

/// RFC 4180 style: fields containing comma, quote or newline are quoted.
std::string escape(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Reads one record; quoted fields may span lines. Returns nullopt at EOF.
std::optional<std::vector<std::string>> read_row(std::istream& in);

std::string join(const std::vector<std::string>& parts, char sep);
std::vector<std::string> split(std::string_view text, char sep);

/// Fixed-precision decimal without locale surprises, e.g. format_real(0.5, 4) == "0.5000".
std::string format_real(double value, int precision);

}  // namespace emolex::csv
