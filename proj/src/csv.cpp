#include "pqtrig/csv.hpp"

#include <cstdio>

namespace pqtrig::csv {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_double(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string{};
}

void write_row(std::ostream& out, std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto f : fields) {
    if (!first) {
      out << ',';
    }
    out << f;
    first = false;
  }
  out << '\n';
}

}  // namespace pqtrig::csv
