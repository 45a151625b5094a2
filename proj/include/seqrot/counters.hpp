#pragma once

#include <algorithm>
#include <cstdint>

namespace seqrot {

/// Exact operation tallies for one rotation run.
///
/// `reads` and `writes` count element loads and stores on the rotated buffer
/// only. Traffic to algorithm-owned scratch storage (the copy buffer, the
/// swap temporary, the modular visit's displaced slot) is reflected in
/// `aux_peak` instead.
struct Counters {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
  std::uint64_t swaps = 0;
  std::uint64_t aux_peak = 0;
  std::uint64_t depth_max = 0;

  /// k in-buffer element exchanges through one temporary.
  void note_swaps(std::uint64_t k) noexcept {
    swaps += k;
    reads += 2 * k;
    writes += 2 * k;
    if (k != 0) note_aux(1);
  }

  void note_aux(std::uint64_t slots) noexcept { aux_peak = std::max(aux_peak, slots); }
  void note_depth(std::uint64_t depth) noexcept { depth_max = std::max(depth_max, depth); }

  friend bool operator==(const Counters&, const Counters&) = default;
};

}  // namespace seqrot
