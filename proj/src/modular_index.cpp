#include "seqrot/modular_index.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace seqrot::modular {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

void require_modulus(index_t n, const char* what) {
  require(n > 0 && n <= kMaxModulus, what);
}

}  // namespace

index_t wrap(index_t x, index_t y) {
  require(x >= 0 && y > 0, "wrap: requires x >= 0 and y > 0");
  // Repeated subtraction of y, taking doubled multiples of y so the loop
  // runs O(log^2(x / y)) times instead of x / y.
  while (x >= y) {
    index_t chunk = y;
    while (chunk <= x - chunk) chunk += chunk;
    x -= chunk;
  }
  return x;
}

index_t gcd_sub(index_t x, index_t y) {
  require(x > 0 && y > 0, "gcd_sub: requires positive arguments");
  while (x != y) {
    if (x > y) {
      x = wrap(x, y);
      if (x == 0) return y;
    } else {
      y = wrap(y, x);
      if (y == 0) return x;
    }
  }
  return x;
}

Bezout ext_gcd(index_t x, index_t y) {
  require(x > 0 && y > 0, "ext_gcd: requires positive arguments");
  index_t old_r = x, r = y;
  index_t old_a = 1, a = 0;
  index_t old_b = 0, b = 1;
  while (r != 0) {
    const index_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_a = std::exchange(a, old_a - q * a);
    old_b = std::exchange(b, old_b - q * b);
  }
  return {old_r, old_a, old_b};
}

index_t tau(index_t n, index_t m) {
  require_modulus(n, "tau: n out of range");
  require(m > 0 && m <= n, "tau: requires 0 < m <= n");
  return n / gcd_sub(n, m);
}

index_t mp(index_t n, index_t m, index_t s, index_t k) {
  require_modulus(n, "mp: n out of range");
  require(m > 0 && m < n, "mp: requires 0 < m < n");
  require(s >= 0 && s < n, "mp: requires 0 <= s < n");
  require(k >= 0, "mp: requires k >= 0");
  // Both factors are below 2^31 after reduction.
  return wrap(s + wrap(wrap(k, n) * m, n), n);
}

CyclePosition invert_mp(index_t n, index_t m, index_t k) {
  require_modulus(n, "invert_mp: n out of range");
  require(m > 0 && m < n, "invert_mp: requires 0 < m < n");
  require(k >= 0 && k < n, "invert_mp: requires 0 <= k < n");

  const index_t g = gcd_sub(n, m);
  const index_t cycle_len = n / g;
  const index_t start = wrap(k, g);
  // Solve step * (m / g) = (k - start) / g  (mod n / g). m / g is invertible
  // modulo n / g; its inverse is the Bezout coefficient of m / g.
  const Bezout bz = ext_gcd(m / g, cycle_len);
  const index_t inverse = ((bz.a % cycle_len) + cycle_len) % cycle_len;
  const index_t step = wrap(inverse * ((k - start) / g), cycle_len);

#ifndef NDEBUG
  if (n <= 4096) {
    index_t v = start;
    index_t scan = 0;
    while (v != k) {
      v = wrap(v + m, n);
      ++scan;
    }
    assert(scan == step && "invert_mp disagrees with linear scan");
  }
#endif
  return {start, step};
}

index_t dest_index(index_t k, index_t n, index_t r) {
  require_modulus(n, "dest_index: n out of range");
  require(k >= 0 && k < n && r >= 0 && r < n, "dest_index: requires 0 <= k, r < n");
  return wrap(k + n - r, n);
}

index_t src_index(index_t k, index_t n, index_t r) {
  require_modulus(n, "src_index: n out of range");
  require(k >= 0 && k < n && r >= 0 && r < n, "src_index: requires 0 <= k, r < n");
  return wrap(k + r, n);
}

std::vector<index_t> CycleDecomposition::cycle(std::size_t c) const {
  if (c >= starts.size()) throw std::out_of_range("cycle index " + std::to_string(c));
  std::vector<index_t> out;
  out.reserve(static_cast<std::size_t>(tau));
  for (index_t i = 0; i < tau; ++i) out.push_back(mp(n, step, starts[c], i));
  return out;
}

CycleDecomposition decompose(index_t n, index_t r) {
  require_modulus(n, "decompose: n out of range");
  require(r > 0 && r < n, "decompose: requires 0 < r < n");
  CycleDecomposition d;
  d.n = n;
  d.step = n - r;
  d.g = gcd_sub(n, d.step);
  d.tau = n / d.g;
  d.starts.reserve(static_cast<std::size_t>(d.g));
  for (index_t s = 0; s < d.g; ++s) d.starts.push_back(s);
  return d;
}

}  // namespace seqrot::modular
