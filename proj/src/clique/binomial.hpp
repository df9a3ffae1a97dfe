#pragma once

#include <cstddef>
#include <vector>

#include "cliquescope/exact.hpp"

namespace cliquescope::detail {

// binomial(n, r) for 0 <= n <= max_n, 0 <= r <= max_r, held in 128 bits where
// possible and as BigInt otherwise.
class BinomialTable {
 public:
  BinomialTable(std::size_t max_n, int max_r);

  std::size_t max_n() const noexcept { return max_n_; }
  int max_r() const noexcept { return max_r_; }

  // Out-of-range r (negative or above n) is a zero coefficient.
  void add_to(ExactAccumulator& acc, std::size_t n, int r) const {
    if (r < 0 || static_cast<std::size_t>(r) > n) return;
    std::size_t i = index(n, r);
    if (fits_[i])
      acc.add(small_[i]);
    else
      acc.add(big_[i]);
  }

  void add_product_to(ExactAccumulator& acc, std::size_t n, int r, std::uint64_t factor) const {
    if (factor == 0 || r < 0 || static_cast<std::size_t>(r) > n) return;
    std::size_t i = index(n, r);
    if (fits_[i])
      acc.add_product(small_[i], factor);
    else
      acc.add(big_[i] * factor);
  }

  BigInt value(std::size_t n, int r) const;

 private:
  std::size_t index(std::size_t n, int r) const noexcept { return n * static_cast<std::size_t>(max_r_ + 1) + static_cast<std::size_t>(r); }

  std::size_t max_n_;
  int max_r_;
  std::vector<u128> small_;
  std::vector<char> fits_;
  std::vector<BigInt> big_;
};

}  // namespace cliquescope::detail
