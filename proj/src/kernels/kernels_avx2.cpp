#include <immintrin.h>

#include <bit>

#include "cliquescope/kernels.hpp"

namespace cliquescope::kernels {
namespace {

// Nibble-lookup popcount over 256-bit blocks (Mula), horizontal sum via SAD.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

std::size_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(_mm256_and_si256(va, vb)), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool and_into_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i any = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                 _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    any = _mm256_or_si256(any, v);
  }
  std::uint64_t tail = 0;
  for (; i < words; ++i) tail |= (dst[i] = a[i] & b[i]);
  return tail != 0 || !_mm256_testz_si256(any, any);
}

bool andnot_into_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i any = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    // _mm256_andnot_si256(x, y) computes ~x & y.
    __m256i v = _mm256_andnot_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)),
                                    _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    any = _mm256_or_si256(any, v);
  }
  std::uint64_t tail = 0;
  for (; i < words; ++i) tail |= (dst[i] = a[i] & ~b[i]);
  return tail != 0 || !_mm256_testz_si256(any, any);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  __m256d acc = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  // (l0 + l2) + (l1 + l3)
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d pair = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  const __m256d va = _mm256_set1_pd(alpha);
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& avx2_kernels() noexcept {
  static const KernelTable table{Backend::avx2, and_popcount_avx2, and_into_avx2, andnot_into_avx2, dot_avx2, axpy_avx2};
  return table;
}

}  // namespace cliquescope::kernels
