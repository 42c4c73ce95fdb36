#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace pqtrig::csv {

/// 17 significant digits, round-trips every double.
std::string format_double(double x);

/// Empty field for a missing value.
std::string format_double(const std::optional<double>& x);

void write_row(std::ostream& out, std::initializer_list<std::string_view> fields);

}  // namespace pqtrig::csv
