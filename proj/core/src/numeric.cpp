#include "lsc/numeric.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "lsc/types.hpp"

namespace lsc {

double log_sum_exp(double a, double b) {
  if (std::isinf(a) && a < 0 && std::isinf(b) && b < 0) {
    return -std::numeric_limits<double>::infinity();
  }
  double m = a > b ? a : b;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

std::pair<double, double> normalize_log_pair(double log_a, double log_b) {
  if (std::isinf(log_a) && log_a < 0 && std::isinf(log_b) && log_b < 0) {
    return {0.5, 0.5};
  }
  double lse = log_sum_exp(log_a, log_b);
  return {std::exp(log_a - lse), std::exp(log_b - lse)};
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("format_double: to_chars failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("parse_double: bad value '" + std::string(s) + "'");
  }
  return v;
}

long long parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("parse_int: bad value '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace lsc
