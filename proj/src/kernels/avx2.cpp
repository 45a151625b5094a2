// Compiled with -mavx2; only reached after a CPUID check.

#include <immintrin.h>

#include <array>
#include <cstdint>

#include "seqrot/kernels.hpp"

namespace seqrot::kernels::avx2 {
namespace {

// In-lane byte shuffle that reverses the order of elem_size-byte elements
// within each 16-byte lane.
__m256i lane_reverse_mask(std::size_t elem_size) noexcept {
  alignas(32) std::array<std::int8_t, 32> bytes{};
  const std::size_t per_lane = 16 / elem_size;
  for (std::size_t j = 0; j < 16; ++j) {
    const std::size_t e = j / elem_size;
    const std::size_t o = j % elem_size;
    const auto src = static_cast<std::int8_t>((per_lane - 1 - e) * elem_size + o);
    bytes[j] = src;
    bytes[j + 16] = src;
  }
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(bytes.data()));
}

inline __m256i reverse_chunk(__m256i v, __m256i mask) noexcept {
  return _mm256_permute4x64_epi64(_mm256_shuffle_epi8(v, mask), 0x4E);
}

}  // namespace

void swap_ranges(std::byte* a, std::byte* b, std::size_t bytes) noexcept {
  std::size_t i = 0;
  for (; i + 64 <= bytes; i += 64) {
    auto* pa = reinterpret_cast<__m256i*>(a + i);
    auto* pb = reinterpret_cast<__m256i*>(b + i);
    const __m256i a0 = _mm256_loadu_si256(pa);
    const __m256i a1 = _mm256_loadu_si256(pa + 1);
    const __m256i b0 = _mm256_loadu_si256(pb);
    const __m256i b1 = _mm256_loadu_si256(pb + 1);
    _mm256_storeu_si256(pa, b0);
    _mm256_storeu_si256(pa + 1, b1);
    _mm256_storeu_si256(pb, a0);
    _mm256_storeu_si256(pb + 1, a1);
  }
  for (; i + 32 <= bytes; i += 32) {
    auto* pa = reinterpret_cast<__m256i*>(a + i);
    auto* pb = reinterpret_cast<__m256i*>(b + i);
    const __m256i va = _mm256_loadu_si256(pa);
    const __m256i vb = _mm256_loadu_si256(pb);
    _mm256_storeu_si256(pa, vb);
    _mm256_storeu_si256(pb, va);
  }
  if (i < bytes) scalar::swap_ranges(a + i, b + i, bytes - i);
}

void reverse_range(std::byte* first, std::size_t count, std::size_t elem_size) noexcept {
  const __m256i mask = lane_reverse_mask(elem_size);
  std::byte* lo = first;
  std::byte* hi = first + count * elem_size;
  // Every supported element size divides 32, so chunks cover whole elements.
  while (hi - lo >= 64) {
    auto* plo = reinterpret_cast<__m256i*>(lo);
    auto* phi = reinterpret_cast<__m256i*>(hi - 32);
    const __m256i front = _mm256_loadu_si256(plo);
    const __m256i back = _mm256_loadu_si256(phi);
    _mm256_storeu_si256(plo, reverse_chunk(back, mask));
    _mm256_storeu_si256(phi, reverse_chunk(front, mask));
    lo += 32;
    hi -= 32;
  }
  scalar::reverse_range(lo, static_cast<std::size_t>(hi - lo) / elem_size, elem_size);
}

}  // namespace seqrot::kernels::avx2
