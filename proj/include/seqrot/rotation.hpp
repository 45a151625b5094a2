#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqrot/algorithm.hpp"
#include "seqrot/counters.hpp"
#include "seqrot/kernels.hpp"
#include "seqrot/probe.hpp"

/// In-place left rotation of a buffer: rot(S, r) = S[r..n) S[0..r).
///
/// Every algorithm takes the normalized amount 0 <= r < n (see normalize())
/// and tallies its buffer traffic into a Counters. r = 0 and n <= 1 return
/// without touching the buffer. Element types must be copyable and default
/// constructible; trivially copyable types additionally use the block
/// kernels in kernels.hpp when no probe is attached.
namespace seqrot {

template <class T>
concept Element = std::semiregular<T>;

struct RotationRequest {
  std::int64_t amount = 0;  // as requested; positive is left
  std::size_t n = 0;
  std::size_t r_left = 0;  // equivalent left rotation in [0, n)
};

/// Maps any signed amount (right rotations negative, |amount| >= n allowed)
/// to the equivalent left rotation.
RotationRequest normalize(std::int64_t amount, std::size_t n) noexcept;

/// Thrown by rotate_swap_recursive for buffers longer than
/// kMaxRecursiveLength; use rotate_swap_iterative instead.
class DepthGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Recursion depth of the recursive block swap reaches n - 1 for r = 1.
inline constexpr std::size_t kMaxRecursiveLength = std::size_t{1} << 16;

/// Outer/inner loop trip counts of rotate_modulo.
struct ModuloStats {
  std::size_t outer_iterations = 0;
  std::vector<std::size_t> inner_iterations;  // one entry per outer iteration
};

namespace detail {

inline void check_amount(std::size_t n, std::size_t r, const char* who) {
  if (n == 0 ? r != 0 : r >= n) {
    throw std::domain_error(std::string(who) + ": rotation amount " + std::to_string(r) +
                            " not below length " + std::to_string(n));
  }
}

inline void check_range(bool ok, const char* who) {
  if (!ok) throw std::out_of_range(std::string(who) + ": index range violates precondition");
}

template <class T>
std::span<const T> view(std::span<T> a) noexcept {
  return {a.data(), a.size()};
}

}  // namespace detail

/// Reverses a[low..high) by exchanging elements at opposite ends. Performs
/// ceil((high - low) / 2) swaps; an odd-length range swaps its middle
/// element with itself.
template <Element T, class Probe = NullProbe>
void reverse(std::span<T> a, std::size_t low, std::size_t high, Counters& counters, Probe&& probe = {}) {
  detail::check_range(low <= high && high <= a.size(), "reverse");
  const std::size_t len = high - low;
  if constexpr (!std::remove_cvref_t<Probe>::enabled && kernels::kReversible<T>) {
    kernels::reverse_range(a.data() + low, len);
    counters.note_swaps((len + 1) / 2);
  } else {
    using std::swap;
    if constexpr (std::remove_cvref_t<Probe>::enabled) probe.enter(Routine::reverse, detail::view(a));
    auto p = static_cast<std::ptrdiff_t>(low);
    auto q = static_cast<std::ptrdiff_t>(high) - 1;
    std::size_t iteration = 0;
    auto observe = [&](Checkpoint at) {
      if constexpr (std::remove_cvref_t<Probe>::enabled) {
        probe.observe(at, ReverseLoopState<T>{detail::view(a), low, high, p, q, iteration});
      }
    };
    observe(Checkpoint::entry);
    while (p < q + 1) {
      swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(q)]);
      counters.note_swaps(1);
      ++p;
      --q;
      ++iteration;
      observe(Checkpoint::iteration);
    }
    observe(Checkpoint::exit);
    if constexpr (std::remove_cvref_t<Probe>::enabled) probe.leave(Routine::reverse, detail::view(a));
  }
}

/// Exchanges a[low..low+d) with a[high-d..high). The sections must not
/// overlap. Performs exactly d swaps.
template <Element T, class Probe = NullProbe>
void swap_sections(std::span<T> a, std::size_t low, std::size_t high, std::size_t d, Counters& counters,
                   Probe&& probe = {}) {
  detail::check_range(low <= high && high <= a.size() && d <= high - low && 2 * d <= high - low,
                      "swap_sections");
  if constexpr (!std::remove_cvref_t<Probe>::enabled && kernels::kSwappable<T>) {
    kernels::swap_ranges(a.data() + low, a.data() + (high - d), d);
    counters.note_swaps(d);
  } else {
    using std::swap;
    if constexpr (std::remove_cvref_t<Probe>::enabled) probe.enter(Routine::swap_sections, detail::view(a));
    std::size_t x = low;
    std::size_t z = high - d;
    std::size_t iteration = 0;
    auto observe = [&](Checkpoint at) {
      if constexpr (std::remove_cvref_t<Probe>::enabled) {
        probe.observe(at, SwapSectionsLoopState<T>{detail::view(a), low, high, d, x, z, iteration});
      }
    };
    observe(Checkpoint::entry);
    while (x != low + d) {
      swap(a[x], a[z]);
      counters.note_swaps(1);
      ++x;
      ++z;
      ++iteration;
      observe(Checkpoint::iteration);
    }
    observe(Checkpoint::exit);
    if constexpr (std::remove_cvref_t<Probe>::enabled) probe.leave(Routine::swap_sections, detail::view(a));
  }
}

/// Rotation through a full-size scratch buffer: element s goes to position
/// (s + n - r) mod n of the scratch, which is then copied back.
/// n reads, n writes, aux_peak = n.
template <Element T, class Probe = NullProbe>
void rotate_copy(std::span<T> a, std::size_t r, Counters& counters, Probe&& probe = {}) {
  const std::size_t n = a.size();
  detail::check_amount(n, r, "rotate_copy");
  if (r == 0 || n <= 1) return;
  constexpr bool probed = std::remove_cvref_t<Probe>::enabled;
  if constexpr (probed) probe.enter(Routine::rotate, detail::view(a));

  std::vector<T> b(n);
  counters.note_aux(n);
  std::size_t s = 0;
  std::size_t d = n - r;
  std::size_t iteration = 0;
  auto observe = [&](Checkpoint at) {
    if constexpr (probed) {
      probe.observe(at, CopyLoopState<T>{detail::view(a), std::span<const T>(b), r, s, d, iteration});
    }
  };
  observe(Checkpoint::entry);
  while (s < n) {
    b[d] = a[s];
    ++counters.reads;
    ++s;
    ++d;
    if (d == n) d = 0;
    ++iteration;
    observe(Checkpoint::iteration);
  }
  observe(Checkpoint::exit);
  std::move(b.begin(), b.end(), a.begin());
  counters.writes += n;
  if constexpr (probed) probe.leave(Routine::rotate, detail::view(a));
}

/// Rotation with scratch for only the shorter block, d = min(r, n - r):
/// save the short block, shift the long block over it with one block move,
/// restore the short block at the far end. n reads, n writes, aux_peak = d.
template <Element T, class Probe = NullProbe>
void rotate_copy_native(std::span<T> a, std::size_t r, Counters& counters, Probe&& probe = {}) {
  const std::size_t n = a.size();
  detail::check_amount(n, r, "rotate_copy_native");
  if (r == 0 || n <= 1) return;
  constexpr bool probed = std::remove_cvref_t<Probe>::enabled;
  if constexpr (probed) probe.enter(Routine::rotate, detail::view(a));

  using Stage = typename CopyNativeState<T>::Stage;
  const auto first = a.begin();
  std::vector<T> scratch;
  auto observe = [&](Stage stage) {
    if constexpr (probed) {
      probe.observe(Checkpoint::iteration,
                    CopyNativeState<T>{detail::view(a), std::span<const T>(scratch), r, stage});
    }
  };

  if (r <= n - r) {
    scratch.assign(std::make_move_iterator(first), std::make_move_iterator(first + r));
    counters.note_aux(r);
    counters.reads += r;
    observe(Stage::saved);
    std::move(first + r, a.end(), first);
    counters.reads += n - r;
    counters.writes += n - r;
    observe(Stage::shifted);
    std::move(scratch.begin(), scratch.end(), first + (n - r));
    counters.writes += r;
  } else {
    const std::size_t d = n - r;
    scratch.assign(std::make_move_iterator(first + r), std::make_move_iterator(a.end()));
    counters.note_aux(d);
    counters.reads += d;
    observe(Stage::saved);
    std::move_backward(first, first + r, a.end());
    counters.reads += r;
    counters.writes += r;
    observe(Stage::shifted);
    std::move(scratch.begin(), scratch.end(), first);
    counters.writes += d;
  }
  observe(Stage::restored);
  if constexpr (probed) probe.leave(Routine::rotate, detail::view(a));
}

/// Three in-place reversals: a[0..r), a[r..n), then a[0..n).
template <Element T, class Probe = NullProbe>
void rotate_reverse(std::span<T> a, std::size_t r, Counters& counters, Probe&& probe = {}) {
  const std::size_t n = a.size();
  detail::check_amount(n, r, "rotate_reverse");
  if (r == 0 || n <= 1) return;
  constexpr bool probed = std::remove_cvref_t<Probe>::enabled;
  if constexpr (probed) probe.enter(Routine::rotate, detail::view(a));
  auto stage_done = [&](int stage) {
    if constexpr (probed) {
      probe.observe(Checkpoint::iteration, ReverseRotateState<T>{detail::view(a), r, stage});
    }
  };
  reverse(a, 0, r, counters, probe);
  stage_done(1);
  reverse(a, r, n, counters, probe);
  stage_done(2);
  reverse(a, 0, n, counters, probe);
  stage_done(3);
  if constexpr (probed) probe.leave(Routine::rotate, detail::view(a));
}

namespace detail {

// Rotates a[low..high) at p by exchanging a[low..p) and a[p..high).
template <Element T, class Probe>
void rotate_swap_helper(std::span<T> a, std::size_t low, std::size_t p, std::size_t high,
                        std::size_t depth, Counters& counters, Probe& probe) {
  constexpr bool probed = std::remove_cvref_t<Probe>::enabled;
  counters.note_depth(depth);
  if constexpr (probed) {
    probe.enter(Routine::swap_helper, view(a));
    probe.observe(Checkpoint::entry, SwapHelperState<T>{view(a), low, p, high, depth});
  }
  if (low < p && p < high) {
    if (p - low == high - p) {
      swap_sections(a, low, high, p - low, counters, probe);
    } else if (p - low < high - p) {
      swap_sections(a, low, high, p - low, counters, probe);
      rotate_swap_helper(a, low, p, high - (p - low), depth + 1, counters, probe);
    } else {
      swap_sections(a, low, high, high - p, counters, probe);
      rotate_swap_helper(a, low + (high - p), p, high, depth + 1, counters, probe);
    }
  }
  if constexpr (probed) {
    probe.observe(Checkpoint::exit, SwapHelperState<T>{view(a), low, p, high, depth});
    probe.leave(Routine::swap_helper, detail::view(a));
  }
}

}  // namespace detail

/// Recursive block swap. Performs n - gcd(r, n - r) swaps; records the
/// recursion depth in depth_max. Throws DepthGuardError above
/// kMaxRecursiveLength.
template <Element T, class Probe = NullProbe>
void rotate_swap_recursive(std::span<T> a, std::size_t r, Counters& counters, Probe&& probe = {}) {
  const std::size_t n = a.size();
  detail::check_amount(n, r, "rotate_swap_recursive");
  if (r == 0 || n <= 1) return;
  if (n > kMaxRecursiveLength) {
    throw DepthGuardError("rotate_swap_recursive: length " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxRecursiveLength) + "; use rotate_swap_iterative");
  }
  constexpr bool probed = std::remove_cvref_t<Probe>::enabled;
  if constexpr (probed) probe.enter(Routine::rotate, detail::view(a));
  detail::rotate_swap_helper(a, 0, r, n, 1, counters, probe);
  if constexpr (probed) probe.leave(Routine::rotate, detail::view(a));
}

/// Iterative block swap: the recursion of rotate_swap_recursive as a loop
/// shrinking [low, high) around p = r. Same swaps, depth_max stays 0.
template <Element T, class Probe = NullProbe>
void rotate_swap_iterative(std::span<T> a, std::size_t r, Counters& counters, Probe&& probe = {}) {
  const std::size_t n = a.size();
  detail::check_amount(n, r, "rotate_swap_iterative");
  if (r == 0 || n <= 1) return;
  constexpr bool probed = std::remove_cvref_t<Probe>::enabled;
  if constexpr (probed) probe.enter(Routine::rotate, detail::view(a));

  std::size_t low = 0;
  const std::size_t p = r;
  std::size_t high = n;
  std::size_t iteration = 0;
  auto observe = [&](Checkpoint at) {
    if constexpr (probed) {
      probe.observe(at, SwapIterativeLoopState<T>{detail::view(a), r, low, p, high, iteration});
    }
  };
  observe(Checkpoint::entry);
  while (low < p && p < high) {
    if (p - low == high - p) {
      swap_sections(a, low, high, p - low, counters, probe);
      const std::size_t left = p - low;
      const std::size_t right = high - p;
      low += left;
      high -= right;
    } else if (p - low < high - p) {
      swap_sections(a, low, high, p - low, counters, probe);
      high -= p - low;
    } else {
      swap_sections(a, low, high, high - p, counters, probe);
      low += high - p;
    }
    ++iteration;
    observe(Checkpoint::iteration);
  }
  observe(Checkpoint::exit);
  if constexpr (probed) probe.leave(Routine::rotate, detail::view(a));
}

/// Modular visit: follows each of the gcd(n, n - r) cycles of the rotation
/// permutation, carrying one displaced element and writing every element
/// directly to its final position. Exactly n buffer writes, aux_peak = 1.
template <Element T, class Probe = NullProbe>
void rotate_modulo(std::span<T> a, std::size_t r, Counters& counters, Probe&& probe = {},
                   ModuloStats* stats = nullptr) {
  const std::size_t n = a.size();
  detail::check_amount(n, r, "rotate_modulo");
  if (stats != nullptr) *stats = {};
  if (r == 0 || n <= 1) return;
  constexpr bool probed = std::remove_cvref_t<Probe>::enabled;
  if constexpr (probed) probe.enter(Routine::rotate, detail::view(a));

  using std::swap;
  const std::size_t step = n - r;
  std::size_t start = 0;
  std::size_t moved = 0;
  std::size_t outer = 0;
  auto observe_outer = [&](Checkpoint at) {
    if constexpr (probed) {
      probe.observe(at, ModuloOuterState<T>{detail::view(a), r, start, moved, outer});
    }
  };
  counters.note_aux(1);
  observe_outer(Checkpoint::entry);
  while (moved != n) {
    T displaced = a[start];
    std::size_t v = start;
    std::size_t inner = 0;
    do {
      v += step;
      if (v >= n) v -= n;
      swap(a[v], displaced);
      ++moved;
      ++inner;
      if constexpr (probed) {
        probe.observe(Checkpoint::iteration,
                      ModuloInnerState<T>{detail::view(a), r, start, moved, v, &displaced, inner});
      }
    } while (v != start);
    // Tallied per cycle so the counters do not alias the element stores.
    counters.reads += inner + 1;
    counters.writes += inner;
    if (stats != nullptr) stats->inner_iterations.push_back(inner);
    ++start;
    ++outer;
    observe_outer(Checkpoint::iteration);
  }
  observe_outer(Checkpoint::exit);
  if (stats != nullptr) stats->outer_iterations = outer;
  if constexpr (probed) probe.leave(Routine::rotate, detail::view(a));
}

/// Runs the named algorithm.
template <Element T, class Probe = NullProbe>
void rotate(Algorithm algo, std::span<T> a, std::size_t r, Counters& counters, Probe&& probe = {}) {
  switch (algo) {
    case Algorithm::copy: return rotate_copy(a, r, counters, probe);
    case Algorithm::copy_native: return rotate_copy_native(a, r, counters, probe);
    case Algorithm::reverse: return rotate_reverse(a, r, counters, probe);
    case Algorithm::swap_recursive: return rotate_swap_recursive(a, r, counters, probe);
    case Algorithm::swap_iterative: return rotate_swap_iterative(a, r, counters, probe);
    case Algorithm::modulo: return rotate_modulo(a, r, counters, probe);
  }
}

}  // namespace seqrot
