#include "dissipa/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace dissipa {

std::string format_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
  return std::string(buf, p);
}

std::optional<double> parse_double(std::string_view token) {
  double v = 0.0;
  const char* b = token.data();
  const char* e = b + token.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) {
    // from_chars does not accept "inf"/"nan" spellings everywhere; we don't either.
    return std::nullopt;
  }
  return v;
}

std::optional<long long> parse_int(std::string_view token) {
  long long v = 0;
  const char* b = token.data();
  const char* e = b + token.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) return std::nullopt;
  return v;
}

}  // namespace dissipa
