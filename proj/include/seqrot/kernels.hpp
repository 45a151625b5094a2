#pragma once

#include <cstddef>
#include <string_view>
#include <type_traits>

/// Block kernels behind the rotation loops: exchanging two disjoint ranges
/// and reversing a range in place. Each kernel has a scalar reference
/// implementation and, on x86-64, an AVX2 variant. The variant is chosen
/// once at startup from CPUID and can be overridden with the SEQROT_ISA
/// environment variable (`scalar` or `avx2`) or set_active_isa().
namespace seqrot::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Whether this build and this CPU can run the given variant.
bool isa_available(Isa isa) noexcept;

/// Best variant this CPU supports.
Isa detected_isa() noexcept;

Isa active_isa() noexcept;

/// Throws std::invalid_argument if the variant is unavailable.
void set_active_isa(Isa isa);

/// Exchange bytes [a, a + bytes) with [b, b + bytes). Ranges must not overlap.
using SwapFn = void (*)(std::byte* a, std::byte* b, std::size_t bytes) noexcept;

/// Reverse `count` elements of `elem_size` bytes starting at `first`.
/// elem_size must be one of kReversibleSizes.
using ReverseFn = void (*)(std::byte* first, std::size_t count, std::size_t elem_size) noexcept;

struct KernelTable {
  Isa isa;
  SwapFn swap_ranges;
  ReverseFn reverse_range;
};

const KernelTable& table(Isa isa);
const KernelTable& active() noexcept;

namespace scalar {
void swap_ranges(std::byte* a, std::byte* b, std::size_t bytes) noexcept;
void reverse_range(std::byte* first, std::size_t count, std::size_t elem_size) noexcept;
}  // namespace scalar

#if defined(SEQROT_HAVE_AVX2)
namespace avx2 {
void swap_ranges(std::byte* a, std::byte* b, std::size_t bytes) noexcept;
void reverse_range(std::byte* first, std::size_t count, std::size_t elem_size) noexcept;
}  // namespace avx2
#endif

template <class T>
inline constexpr bool kSwappable = std::is_trivially_copyable_v<T>;

template <class T>
inline constexpr bool kReversible =
    std::is_trivially_copyable_v<T> &&
    (sizeof(T) == 1 || sizeof(T) == 2 || sizeof(T) == 4 || sizeof(T) == 8 || sizeof(T) == 16);

template <class T>
void swap_ranges(T* a, T* b, std::size_t count) noexcept {
  static_assert(kSwappable<T>);
  active().swap_ranges(reinterpret_cast<std::byte*>(a), reinterpret_cast<std::byte*>(b),
                       count * sizeof(T));
}

template <class T>
void reverse_range(T* first, std::size_t count) noexcept {
  static_assert(kReversible<T>);
  active().reverse_range(reinterpret_cast<std::byte*>(first), count, sizeof(T));
}

}  // namespace seqrot::kernels
