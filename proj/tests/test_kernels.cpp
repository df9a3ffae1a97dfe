#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "cliquescope/error.hpp"
#include "cliquescope/kernels.hpp"

using namespace cliquescope;
namespace k = cliquescope::kernels;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng() & rng();  // sparse-ish bits
  return w;
}

std::vector<double> random_doubles(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels against the obvious definitions") {
  const auto& s = k::scalar_table();
  std::vector<std::uint64_t> a{0b1011, ~0ull}, b{0b0110, 1ull << 63};
  CHECK(s.and_popcount(a.data(), b.data(), 2) == 2);
  std::vector<std::uint64_t> dst(2);
  CHECK(s.and_into(dst.data(), a.data(), b.data(), 2));
  CHECK(dst[0] == 0b0010);
  CHECK(dst[1] == 1ull << 63);
  CHECK(s.andnot_into(dst.data(), a.data(), a.data(), 2) == false);
  std::vector<double> x{1, 2, 3, 4, 5}, y{5, 4, 3, 2, 1};
  CHECK(s.dot(x.data(), y.data(), 5) == 35.0);
  s.axpy(2.0, x.data(), y.data(), 5);
  CHECK(y == std::vector<double>{7, 8, 9, 10, 11});
}

TEST_CASE("avx2 kernels are bit-identical to scalar") {
  const k::KernelTable* avx = k::avx2_table();
  if (avx == nullptr) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  const auto& s = k::scalar_table();
  std::mt19937_64 rng(42);
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 9, 16, 31, 64, 100}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_words(rng, n), b = random_words(rng, n);
      CHECK(s.and_popcount(a.data(), b.data(), n) == avx->and_popcount(a.data(), b.data(), n));

      std::vector<std::uint64_t> d1(n, 7), d2(n, 9);
      CHECK(s.and_into(d1.data(), a.data(), b.data(), n) == avx->and_into(d2.data(), a.data(), b.data(), n));
      CHECK(d1 == d2);
      CHECK(s.andnot_into(d1.data(), a.data(), b.data(), n) == avx->andnot_into(d2.data(), a.data(), b.data(), n));
      CHECK(d1 == d2);

      auto x = random_doubles(rng, n), y = random_doubles(rng, n);
      CHECK(std::bit_cast<std::uint64_t>(s.dot(x.data(), y.data(), n)) ==
            std::bit_cast<std::uint64_t>(avx->dot(x.data(), y.data(), n)));
      auto y1 = y, y2 = y;
      s.axpy(0.37, x.data(), y1.data(), n);
      avx->axpy(0.37, x.data(), y2.data(), n);
      CHECK(y1 == y2);
    }
  }
  // Zero result in the vector part, set bit only in the tail.
  std::vector<std::uint64_t> a(5, 0), b(5, ~0ull), d(5);
  a[4] = 1;
  CHECK(avx->and_into(d.data(), a.data(), b.data(), 5));
  a[4] = 0;
  CHECK_FALSE(avx->and_into(d.data(), a.data(), b.data(), 5));
}

TEST_CASE("backend selection") {
  k::select_backend(k::Backend::scalar);
  CHECK(k::active().backend == k::Backend::scalar);
  if (k::backend_supported(k::Backend::avx2)) {
    k::select_backend(k::Backend::avx2);
    CHECK(k::active().backend == k::Backend::avx2);
  } else {
    CHECK_THROWS_AS(k::select_backend(k::Backend::avx2), ArgumentError);
  }
  CHECK(k::backend_name(k::Backend::scalar) == "scalar");
}
