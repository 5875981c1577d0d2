#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace dissipa {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

/// Strict double parse of the whole token; nullopt on trailing garbage.
std::optional<double> parse_double(std::string_view token);

std::optional<long long> parse_int(std::string_view token);

}  // namespace dissipa
