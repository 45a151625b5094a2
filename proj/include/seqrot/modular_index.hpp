#pragma once

#include <cstdint>
#include <vector>

/// Index arithmetic behind rotation: subtraction-based modulo, gcd, the
/// cycle structure of a rotation permutation and its inversion.
///
/// All functions are pure. Arguments are signed so that negative inputs can
/// be rejected with std::domain_error instead of silently wrapping. Moduli
/// are limited to kMaxModulus so that every intermediate product fits in
/// 64 bits.
namespace seqrot::modular {

using index_t = std::int64_t;

inline constexpr index_t kMaxModulus = index_t{1} << 31;

/// x mod y for x >= 0, y > 0, by subtraction. Result in [0, y).
index_t wrap(index_t x, index_t y);

/// Greatest common divisor by successive subtraction.
index_t gcd_sub(index_t x, index_t y);

struct Bezout {
  index_t g;
  index_t a;
  index_t b;
  friend bool operator==(const Bezout&, const Bezout&) = default;
};

/// g = gcd(x, y) together with a, b such that a*x + b*y = g.
Bezout ext_gcd(index_t x, index_t y);

/// Cycle length n / gcd(n, m). Requires 0 < m <= n.
index_t tau(index_t n, index_t m);

/// k-th index of the cycle with step m modulo n starting at s:
/// mp(n, m, s, 0) = s, mp(n, m, s, k) = wrap(mp(n, m, s, k - 1) + m, n).
/// Requires 0 < m < n, 0 <= s < n, k >= 0.
index_t mp(index_t n, index_t m, index_t s, index_t k);

struct CyclePosition {
  index_t start;  // in [0, gcd(n, m))
  index_t step;   // in [0, tau(n, m))
  friend bool operator==(const CyclePosition&, const CyclePosition&) = default;
};

/// The unique (start, step) with mp(n, m, start, step) = k, obtained from
/// Bezout coefficients of m/g and n/g. Requires 0 < m < n, 0 <= k < n.
CyclePosition invert_mp(index_t n, index_t m, index_t k);

/// Position in the left rotation by r where the element at k lands.
index_t dest_index(index_t k, index_t n, index_t r);

/// Position in the original sequence that supplies element k of the left
/// rotation by r.
index_t src_index(index_t k, index_t n, index_t r);

struct CycleDecomposition {
  index_t n = 0;
  index_t step = 0;  // n - r
  index_t g = 0;     // gcd(n, step)
  index_t tau = 0;   // n / g
  std::vector<index_t> starts;

  /// The tau indices of the cycle beginning at starts[c], in visiting order.
  std::vector<index_t> cycle(std::size_t c) const;
};

/// Disjoint-cycle structure of the left rotation by r. Requires 0 < r < n.
CycleDecomposition decompose(index_t n, index_t r);

}  // namespace seqrot::modular
