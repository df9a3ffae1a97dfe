#include "binomial.hpp"

#include <algorithm>
#include <cmath>

namespace cliquescope {
namespace {

// v ~= mantissa * 2^exponent with mantissa < 2^64, rounded to nearest.
std::pair<double, long> split(const BigInt& v) {
  if (v.is_zero()) return {0.0, 0};
  const long msb = static_cast<long>(boost::multiprecision::msb(v));
  if (msb < 64) return {static_cast<double>(static_cast<std::uint64_t>(v)), 0};
  const long shift = msb - 63;
  BigInt top = v >> shift;
  auto bits = static_cast<std::uint64_t>(top);
  // Fold the discarded bits into a sticky bit below the 53-bit rounding point.
  if (static_cast<long>(boost::multiprecision::lsb(v)) < shift) bits |= 1;
  return {static_cast<double>(bits), shift};
}

}  // namespace

double ratio(const BigInt& num, const BigInt& den) {
  auto [mn, en] = split(num);
  auto [md, ed] = split(den);
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::string to_decimal(const BigInt& v) { return v.str(); }

namespace detail {

BinomialTable::BinomialTable(std::size_t max_n, int max_r)
    : max_n_(max_n), max_r_(max_r) {
  const std::size_t size = (max_n + 1) * static_cast<std::size_t>(max_r + 1);
  small_.assign(size, 0);
  fits_.assign(size, 1);
  big_.resize(size);
  for (std::size_t n = 0; n <= max_n; ++n) {
    small_[index(n, 0)] = 1;
    const int top = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(max_r)));
    for (int r = 1; r <= top; ++r) {
      // binomial(n, r) = binomial(n-1, r-1) + binomial(n-1, r)
      std::size_t a = index(n - 1, r - 1);
      std::size_t b = index(n - 1, r);
      std::size_t i = index(n, r);
      u128 sum;
      if (fits_[a] && fits_[b] && !__builtin_add_overflow(small_[a], small_[b], &sum)) {
        small_[i] = sum;
      } else {
        fits_[i] = 0;
        big_[i] = (fits_[a] ? to_big(small_[a]) : big_[a]) + (fits_[b] ? to_big(small_[b]) : big_[b]);
      }
    }
  }
}

BigInt BinomialTable::value(std::size_t n, int r) const {
  if (r < 0 || static_cast<std::size_t>(r) > n) return 0;
  std::size_t i = index(n, r);
  return fits_[i] ? to_big(small_[i]) : big_[i];
}

}  // namespace detail
}  // namespace cliquescope
