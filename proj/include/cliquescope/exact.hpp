#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquescope {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

inline BigInt to_big(u128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out |= static_cast<std::uint64_t>(v);
  return out;
}

// Sum of non-negative integers: a 128-bit fast lane whose carries spill into
// an arbitrary-precision high part.
class ExactAccumulator {
 public:
  void add(u128 v) noexcept {
    if (__builtin_add_overflow(low_, v, &low_)) carry();
  }

  void add(const BigInt& v) { high_ += v; }

  // Adds v * factor.
  void add_product(u128 v, std::uint64_t factor) {
    u128 product;
    if (__builtin_mul_overflow(v, static_cast<u128>(factor), &product))
      high_ += to_big(v) * factor;
    else
      add(product);
  }

  void merge(const ExactAccumulator& other) {
    add(other.low_);
    if (!other.high_.is_zero()) high_ += other.high_;
  }

  BigInt value() const { return high_ + to_big(low_); }

 private:
  void carry() { high_ += BigInt(1) << 128; }

  u128 low_ = 0;
  BigInt high_;
};

// Nearest double to num / den for den > 0, without overflowing on huge operands.
double ratio(const BigInt& num, const BigInt& den);

std::string to_decimal(const BigInt& v);

}  // namespace cliquescope
