#include <bit>

#include "cliquescope/kernels.hpp"

namespace cliquescope::kernels {
namespace {

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool and_into_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < words; ++i) any |= (dst[i] = a[i] & b[i]);
  return any != 0;
}

bool andnot_into_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < words; ++i) any |= (dst[i] = a[i] & ~b[i]);
  return any != 0;
}

// Lane l accumulates indices i with i % 4 == l; lanes combine as (0+2)+(1+3)
// to match the AVX2 horizontal reduction.
double dot_scalar(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (std::size_t l = 0; l < 4; ++l) lane[l] += a[i + l] * b[i + l];
  double sum = (lane[0] + lane[2]) + (lane[1] + lane[3]);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Backend::scalar, and_popcount_scalar, and_into_scalar, andnot_into_scalar, dot_scalar,
                                 axpy_scalar};
  return table;
}

}  // namespace cliquescope::kernels
