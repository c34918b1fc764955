#include "graphprof/ints.hpp"

#include <algorithm>
#include <limits>

namespace graphprof {

std::string to_string(count_t v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  char buf[48];
  int pos = 48;
  while (u) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) buf[--pos] = '-';
  return std::string(buf + pos, buf + 48);
}

count_t parse_count(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty count literal");
  bool neg = s.front() == '-';
  std::size_t i = neg || s.front() == '+' ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign-only count literal");
  unsigned __int128 u = 0;
  constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad digit in count literal: " + std::string(s));
    unsigned d = static_cast<unsigned>(c - '0');
    if (u > (kMax - d) / 10) throw std::overflow_error("count literal overflows 128 bits");
    u = u * 10 + d;
  }
  constexpr unsigned __int128 kSignedMax =
      (static_cast<unsigned __int128>(1) << 127) - 1;
  if (!neg && u > kSignedMax) throw std::overflow_error("count literal overflows");
  if (neg && u > kSignedMax + 1) throw std::overflow_error("count literal overflows");
  return neg ? -static_cast<count_t>(u) : static_cast<count_t>(u);
}

count_t binomial(std::int64_t n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = static_cast<int>(n - k);
  count_t r = 1;
  constexpr count_t kMax = (static_cast<unsigned __int128>(1) << 126);
  for (int i = 1; i <= k; ++i) {
    count_t factor = n - k + i;
    if (r > kMax / factor) throw std::overflow_error("binomial overflows 128 bits");
    r = r * factor / i;  // divisible at every step: r holds C(n-k+i, i)
  }
  return r;
}

double ratio(count_t num, count_t den) {
  if (den == 0) return 0.0;
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

}  // namespace graphprof
