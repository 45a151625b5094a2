#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "seqrot/modular_index.hpp"

using namespace seqrot::modular;

namespace {

// Brute-force cycle walk: repeatedly add m modulo n.
index_t walk(index_t n, index_t m, index_t s, index_t k) {
  index_t v = s;
  for (index_t i = 0; i < k; ++i) v = (v + m) % n;
  return v;
}

}  // namespace

TEST_CASE("wrap matches the remainder operator") {
  CHECK(wrap(3, 6) == 3);
  CHECK(wrap(7, 6) == 1);
  CHECK(wrap(6, 6) == 0);
  CHECK(wrap(17, 5) == 2);
  CHECK(wrap(0, 1) == 0);
  CHECK(wrap(4, 5) == 4);
  CHECK(wrap(kMaxModulus * 3 + 7, kMaxModulus) == 7);
  for (index_t y = 1; y <= 70; ++y) {
    for (index_t x = 0; x <= 300; ++x) REQUIRE(wrap(x, y) == x % y);
  }
}

TEST_CASE("wrap rejects its domain violations") {
  CHECK_THROWS_AS(wrap(-1, 5), std::domain_error);
  CHECK_THROWS_AS(wrap(3, 0), std::domain_error);
  CHECK_THROWS_AS(wrap(3, -2), std::domain_error);
}

TEST_CASE("gcd by subtraction agrees with std::gcd") {
  CHECK(gcd_sub(6, 4) == 2);
  CHECK(gcd_sub(12, 4) == 4);
  CHECK(gcd_sub(5, 5) == 5);
  CHECK(gcd_sub(7, 3) == 1);
  CHECK(gcd_sub(1, 1) == 1);
  for (index_t x = 1; x <= 120; ++x) {
    for (index_t y = 1; y <= 120; ++y) {
      index_t common = 1;
      for (index_t d = 1; d <= std::min(x, y); ++d) {
        if (x % d == 0 && y % d == 0) common = d;
      }
      REQUIRE(gcd_sub(x, y) == common);
    }
  }
  CHECK(gcd_sub(kMaxModulus, 3 * 1024) == 1024);
  CHECK_THROWS_AS(gcd_sub(7, 0), std::domain_error);
  CHECK_THROWS_AS(gcd_sub(-2, 4), std::domain_error);
}

TEST_CASE("extended gcd produces Bezout coefficients") {
  CHECK(ext_gcd(4, 6).g == 2);
  CHECK(ext_gcd(1, 1).a + ext_gcd(1, 1).b == 1);
  CHECK(3 * ext_gcd(3, 7).a + 7 * ext_gcd(3, 7).b == 1);
  CHECK_THROWS_AS(ext_gcd(0, 3), std::domain_error);
  for (index_t x = 1; x <= 90; ++x) {
    for (index_t y = 1; y <= 90; ++y) {
      const Bezout b = ext_gcd(x, y);
      REQUIRE(b.g == std::gcd(x, y));
      REQUIRE(b.a * x + b.b * y == b.g);
    }
  }
  const Bezout big = ext_gcd(kMaxModulus - 1, 1'000'003);
  CHECK(big.a * (kMaxModulus - 1) + big.b * 1'000'003 == big.g);
}

TEST_CASE("tau is the cycle length") {
  CHECK(tau(6, 4) == 3);
  CHECK(tau(12, 4) == 3);
  CHECK(tau(5, 4) == 5);
  CHECK(tau(8, 8) == 1);
  CHECK_THROWS_AS(tau(5, 0), std::domain_error);
  CHECK_THROWS_AS(tau(5, 6), std::domain_error);
}

TEST_CASE("mp follows the cycle") {
  // n = 6, step 4: 0 -> 4 -> 2 -> 0 and 1 -> 5 -> 3 -> 1.
  CHECK(mp(6, 4, 0, 1) == 4);
  CHECK(mp(6, 4, 0, 2) == 2);
  CHECK(mp(6, 4, 0, 3) == 0);
  CHECK(mp(6, 4, 1, 1) == 5);
  for (index_t n = 2; n <= 30; ++n) {
    for (index_t m = 1; m < n; ++m) {
      for (index_t s = 0; s < n; ++s) {
        for (index_t k = 0; k <= 2 * n; ++k) REQUIRE(mp(n, m, s, k) == walk(n, m, s, k));
      }
    }
  }
  // A step of n - 1 walks backwards by one.
  CHECK(mp(kMaxModulus, kMaxModulus - 1, 5, kMaxModulus + 3) == 2);
}

TEST_CASE("invert_mp is a bijection onto the cycle positions") {
  for (index_t n = 2; n <= 60; ++n) {
    for (index_t m = 1; m < n; ++m) {
      const index_t g = std::gcd(n, m);
      std::set<std::pair<index_t, index_t>> seen;
      for (index_t k = 0; k < n; ++k) {
        const CyclePosition pos = invert_mp(n, m, k);
        REQUIRE(pos.start >= 0);
        REQUIRE(pos.start < g);
        REQUIRE(pos.step >= 0);
        REQUIRE(pos.step < n / g);
        REQUIRE(walk(n, m, pos.start, pos.step) == k);
        seen.insert({pos.start, pos.step});
      }
      REQUIRE(seen.size() == static_cast<std::size_t>(n));
    }
  }
  // Start is k mod g; the step solves start + step * m = k (mod n).
  CHECK(invert_mp(12, 4, 7) == CyclePosition{3, 1});
  CHECK(invert_mp(6, 4, 2) == CyclePosition{0, 2});
}

TEST_CASE("invert_mp at large moduli") {
  const index_t n = kMaxModulus - 1;
  const index_t m = 1'234'567;
  for (index_t k : {index_t{0}, index_t{1}, n / 2, n - 1}) {
    const CyclePosition pos = invert_mp(n, m, k);
    CHECK(mp(n, m, pos.start, pos.step) == k);
  }
}

TEST_CASE("destination and source indices of a rotation") {
  // ABCDEF rotated left by 2 is CDEFAB.
  CHECK(dest_index(0, 6, 2) == 4);
  CHECK(dest_index(2, 6, 2) == 0);
  CHECK(src_index(0, 6, 2) == 2);
  CHECK(src_index(5, 6, 2) == 1);
  for (index_t n = 1; n <= 40; ++n) {
    for (index_t r = 0; r < n; ++r) {
      for (index_t k = 0; k < n; ++k) {
        REQUIRE(src_index(dest_index(k, n, r), n, r) == k);
        REQUIRE(dest_index(k, n, r) == (k + n - r) % n);
      }
    }
  }
}

TEST_CASE("decompose partitions the indices into gcd cycles") {
  const CycleDecomposition d = decompose(6, 2);
  CHECK(d.step == 4);
  CHECK(d.g == 2);
  CHECK(d.tau == 3);
  CHECK(d.cycle(0) == std::vector<index_t>{0, 4, 2});
  CHECK(d.cycle(1) == std::vector<index_t>{1, 5, 3});
  CHECK_THROWS_AS(d.cycle(2), std::out_of_range);

  CHECK(decompose(5, 1).g == 1);
  CHECK(decompose(5, 1).tau == 5);
  CHECK(decompose(12, 8).g == 4);
  CHECK(decompose(12, 8).tau == 3);

  for (index_t n = 2; n <= 40; ++n) {
    for (index_t r = 1; r < n; ++r) {
      const CycleDecomposition dc = decompose(n, r);
      std::set<index_t> all;
      for (std::size_t c = 0; c < dc.starts.size(); ++c) {
        for (index_t k : dc.cycle(c)) all.insert(k);
      }
      REQUIRE(all.size() == static_cast<std::size_t>(n));
      REQUIRE(dc.g * dc.tau == n);
    }
  }
  CHECK_THROWS_AS(decompose(6, 0), std::domain_error);
  CHECK_THROWS_AS(decompose(6, 6), std::domain_error);
  CHECK_THROWS_AS(decompose(kMaxModulus + 1, 1), std::domain_error);
}
