#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a scalar reference and, where
// the CPU supports it, an AVX2 variant; the active table is picked once at
// startup. Variants are bit-identical: dot() uses a fixed four-lane
// accumulation order in both paths.
namespace cliquescope::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  // popcount(a & b)
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // dst = a & b; returns whether dst has any bit set
  bool (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // dst = a & ~b; returns whether dst has any bit set
  bool (*andnot_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_table() noexcept;
// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_table() noexcept;

bool backend_supported(Backend b) noexcept;
// Throws ArgumentError for an unsupported backend.
void select_backend(Backend b);
const KernelTable& active() noexcept;
std::string_view backend_name(Backend b) noexcept;

inline std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  return active().and_popcount(a.data(), b.data(), a.size());
}
inline bool and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  return active().and_into(dst.data(), a.data(), b.data(), dst.size());
}
inline bool andnot_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  return active().andnot_into(dst.data(), a.data(), b.data(), dst.size());
}
inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
  return active().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
  active().axpy(alpha, x.data(), y.data(), y.size());
}

}  // namespace cliquescope::kernels
