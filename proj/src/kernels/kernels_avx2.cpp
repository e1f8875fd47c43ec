#include "dgsp/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <bit>

#define DGSP_AVX2 __attribute__((target("avx2")))

namespace dgsp::kernels {
namespace {

// Per-byte popcount via nibble lookup, then horizontal byte sums into the
// four 64-bit lanes.
DGSP_AVX2 inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

DGSP_AVX2 inline uint64_t horizontal_sum(__m256i v) {
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Adds weights[0..63] selected by the bits of `word` into `acc`.
DGSP_AVX2 inline __m256i accumulate_word(__m256i acc, uint64_t word, const uint64_t* weights) {
  const __m256i select = _mm256_set_epi64x(8, 4, 2, 1);
  for (int nibble = 0; nibble < 16; ++nibble) {
    const uint64_t bits = (word >> (4 * nibble)) & 0xF;
    if (bits == 0) continue;
    const __m256i broadcast = _mm256_set1_epi64x(static_cast<long long>(bits));
    const __m256i lane_mask = _mm256_cmpeq_epi64(_mm256_and_si256(broadcast, select), select);
    const __m256i w =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(weights + 4 * nibble));
    acc = _mm256_add_epi64(acc, _mm256_and_si256(w, lane_mask));
  }
  return acc;
}

DGSP_AVX2 uint64_t popcount_avx2(const uint64_t* bits, size_t words) {
  __m256i acc = _mm256_setzero_si256();
  size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + w));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  uint64_t total = horizontal_sum(acc);
  for (; w < words; ++w) total += std::popcount(bits[w]);
  return total;
}

DGSP_AVX2 uint64_t and_popcount_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                                     size_t words) {
  __m256i acc = _mm256_setzero_si256();
  size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), v);
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  uint64_t total = horizontal_sum(acc);
  for (; w < words; ++w) {
    dst[w] = a[w] & b[w];
    total += std::popcount(dst[w]);
  }
  return total;
}

DGSP_AVX2 uint64_t weighted_sum_avx2(const uint64_t* bits, const uint64_t* weights, size_t words) {
  __m256i acc = _mm256_setzero_si256();
  for (size_t w = 0; w < words; ++w) {
    if (bits[w] != 0) acc = accumulate_word(acc, bits[w], weights + 64 * w);
  }
  return horizontal_sum(acc);
}

DGSP_AVX2 uint64_t and_weighted_sum_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                                         const uint64_t* weights, size_t words) {
  __m256i acc = _mm256_setzero_si256();
  size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), v);
    if (_mm256_testz_si256(v, v)) continue;
    for (size_t j = 0; j < 4; ++j) {
      if (dst[w + j] != 0) acc = accumulate_word(acc, dst[w + j], weights + 64 * (w + j));
    }
  }
  for (; w < words; ++w) {
    dst[w] = a[w] & b[w];
    if (dst[w] != 0) acc = accumulate_word(acc, dst[w], weights + 64 * w);
  }
  return horizontal_sum(acc);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{popcount_avx2, weighted_sum_avx2, and_popcount_avx2,
                                 and_weighted_sum_avx2};
  return table;
}

}  // namespace dgsp::kernels

#else

namespace dgsp::kernels {

// No AVX2 on this target; dispatch never selects it.
const KernelTable& avx2_table() { return scalar_table(); }

}  // namespace dgsp::kernels

#endif
