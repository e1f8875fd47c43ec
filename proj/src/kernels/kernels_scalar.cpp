#include <bit>

#include "dgsp/kernels.hpp"

namespace dgsp::kernels {
namespace {

uint64_t sum_set_bits(uint64_t word, const uint64_t* weights) {
  uint64_t total = 0;
  while (word != 0) {
    total += weights[std::countr_zero(word)];
    word &= word - 1;
  }
  return total;
}

uint64_t popcount_scalar(const uint64_t* bits, size_t words) {
  uint64_t total = 0;
  for (size_t w = 0; w < words; ++w) total += std::popcount(bits[w]);
  return total;
}

uint64_t weighted_sum_scalar(const uint64_t* bits, const uint64_t* weights, size_t words) {
  uint64_t total = 0;
  for (size_t w = 0; w < words; ++w) total += sum_set_bits(bits[w], weights + 64 * w);
  return total;
}

uint64_t and_popcount_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t words) {
  uint64_t total = 0;
  for (size_t w = 0; w < words; ++w) {
    dst[w] = a[w] & b[w];
    total += std::popcount(dst[w]);
  }
  return total;
}

uint64_t and_weighted_sum_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                                 const uint64_t* weights, size_t words) {
  uint64_t total = 0;
  for (size_t w = 0; w < words; ++w) {
    dst[w] = a[w] & b[w];
    total += sum_set_bits(dst[w], weights + 64 * w);
  }
  return total;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{popcount_scalar, weighted_sum_scalar, and_popcount_scalar,
                                 and_weighted_sum_scalar};
  return table;
}

}  // namespace dgsp::kernels
