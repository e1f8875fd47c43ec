#pragma once

// Bitmap kernels used by the pattern miner's vertical index.
//
// A bitmap is a span of 64-bit words; bit b of word w stands for record
// 64 * w + b. Weight arrays are indexed by record and must cover every word
// of the bitmap (64 entries per word, zero-padded past the last record).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dgsp::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  uint64_t (*popcount)(const uint64_t* bits, size_t words);
  uint64_t (*weighted_sum)(const uint64_t* bits, const uint64_t* weights, size_t words);
  // dst = a & b; returns popcount(dst).
  uint64_t (*and_popcount)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t words);
  // dst = a & b; returns the sum of weights over set bits of dst.
  uint64_t (*and_weighted_sum)(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                               const uint64_t* weights, size_t words);
};

const KernelTable& scalar_table();
/// Only valid when `isa_supported(Isa::kAvx2)`.
const KernelTable& avx2_table();

bool isa_supported(Isa isa);
const KernelTable& table(Isa isa);

/// Best supported ISA, unless the DGSP_SIMD environment variable is set to
/// "scalar". Resolved once per process.
Isa active_isa();
const KernelTable& active();

inline uint64_t popcount(std::span<const uint64_t> bits) {
  return active().popcount(bits.data(), bits.size());
}

inline uint64_t weighted_sum(std::span<const uint64_t> bits, std::span<const uint64_t> weights) {
  return active().weighted_sum(bits.data(), weights.data(), bits.size());
}

inline uint64_t and_popcount(std::span<uint64_t> dst, std::span<const uint64_t> a,
                             std::span<const uint64_t> b) {
  return active().and_popcount(dst.data(), a.data(), b.data(), dst.size());
}

inline uint64_t and_weighted_sum(std::span<uint64_t> dst, std::span<const uint64_t> a,
                                 std::span<const uint64_t> b, std::span<const uint64_t> weights) {
  return active().and_weighted_sum(dst.data(), a.data(), b.data(), weights.data(), dst.size());
}

}  // namespace dgsp::kernels
