#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace lsc {

// Largest exponent fed to std::exp; keeps ratio products finite.
inline constexpr double kMaxExpArg = 700.0;

// log(exp(a) + exp(b)) without overflow. Both inputs -inf yields -inf.
double log_sum_exp(double a, double b);

// Normalizes a pair of log scores into probabilities summing to 1.
// Degenerate (-inf, -inf) input maps to (0.5, 0.5).
std::pair<double, double> normalize_log_pair(double log_a, double log_b);

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Strict parse of the above; throws lsc::Error on trailing garbage.
double parse_double(std::string_view s);

long long parse_int(std::string_view s);

}  // namespace lsc
