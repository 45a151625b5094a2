#pragma once

#include <cstddef>
#include <span>

/// Loop-boundary observation points for the rotation algorithms.
///
/// Every algorithm in rotation.hpp takes a Probe. With the default
/// NullProbe the hooks compile away and bulk kernels are used. A probe with
/// `enabled = true` forces the element-by-element loops and receives one of
/// the state records below at each Checkpoint.
namespace seqrot {

enum class Checkpoint { entry, iteration, exit };

enum class Routine { rotate, reverse, swap_sections, swap_helper };

struct NullProbe {
  static constexpr bool enabled = false;
};

template <class T>
struct CopyLoopState {
  std::span<const T> a;
  std::span<const T> scratch;
  std::size_t r, s, d;
  std::size_t iteration;
};

template <class T>
struct CopyNativeState {
  enum class Stage { saved, shifted, restored };
  std::span<const T> a;
  std::span<const T> scratch;
  std::size_t r;
  Stage stage;
};

template <class T>
struct ReverseLoopState {
  std::span<const T> a;
  std::size_t low, high;
  std::ptrdiff_t p, q;
  std::size_t iteration;
};

/// After each of the three reversals of the reversal-based rotation.
template <class T>
struct ReverseRotateState {
  std::span<const T> a;
  std::size_t r;
  int stage;  // 1, 2, 3
};

template <class T>
struct SwapSectionsLoopState {
  std::span<const T> a;
  std::size_t low, high, d, x, z;
  std::size_t iteration;
};

template <class T>
struct SwapHelperState {
  std::span<const T> a;
  std::size_t low, p, high;
  std::size_t depth;
};

template <class T>
struct SwapIterativeLoopState {
  std::span<const T> a;
  std::size_t r, low, p, high;
  std::size_t iteration;
};

template <class T>
struct ModuloOuterState {
  std::span<const T> a;
  std::size_t r, start, moved;
  std::size_t iteration;
};

template <class T>
struct ModuloInnerState {
  std::span<const T> a;
  std::size_t r, start, moved, v;
  const T* displaced;
  std::size_t iteration;
};

}  // namespace seqrot
