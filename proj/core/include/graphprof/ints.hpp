#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphprof {

// Exact subset counts. C(n,4) sums of per-vertex binomials overflow 64 bits
// well before the supported vertex limit, so all counting arithmetic runs
// in 128 bits and is narrowed only at the reporting boundary.
using count_t = __int128;

std::string to_string(count_t v);
count_t parse_count(std::string_view s);

// Exact C(n,k). Valid for the ranges this library counts over (k <= 12,
// n <= vertex limit); throws std::overflow_error if the product would not fit.
count_t binomial(std::int64_t n, int k);

inline double to_double(count_t v) { return static_cast<double>(v); }

// Density = num/den as binary64, computed in extended precision.
double ratio(count_t num, count_t den);

}  // namespace graphprof
