#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqrot/algorithm.hpp"
#include "seqrot/rotation.hpp"

namespace seqrot::verify {

/// Reference rotation by direct slice concatenation:
///   0 <= amount < n:  S[amount..n) S[0..amount)
///   -n < amount <= 0: S[n+amount..n) S[0..n+amount)
/// Amounts with |amount| >= n are first reduced modulo n.
template <class T>
std::vector<T> oracle_rotate(std::span<const T> seq, std::int64_t amount) {
  const auto n = static_cast<std::int64_t>(seq.size());
  if (n == 0) return {};
  amount %= n;
  const std::int64_t cut = amount >= 0 ? amount : n + amount;
  std::vector<T> out;
  out.reserve(seq.size());
  out.insert(out.end(), seq.begin() + cut, seq.end());
  out.insert(out.end(), seq.begin(), seq.begin() + cut);
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force lemma checks

enum class LemmaId { rev_cat, rot_swap_left, rot_swap_right, invert_mp, rot_pointwise, wrap_bounds };

std::string_view lemma_name(LemmaId id) noexcept;

struct LemmaFailure {
  std::string witness;
  std::string expected;
  std::string actual;
};

struct LemmaReport {
  LemmaId lemma;
  std::size_t domain_bound = 0;
  std::uint64_t cases = 0;
  std::uint64_t skipped = 0;  // instances needing a rotation by the full length
  std::vector<LemmaFailure> failures;

  bool holds() const noexcept { return failures.empty(); }
};

/// `<lemma> bound=<b> cases=<c> skipped=<s> failures=<f>`
std::string summary_line(const LemmaReport& report);

/// Summary line followed by up to `max_failures` indented witness lines.
void write_report(std::ostream& os, const LemmaReport& report, std::size_t max_failures = 5);

/// rot(S, r)[k] = S[src_index(k)] and S[k] = rot(S, r)[dest_index(k)] for
/// all 1 <= n <= max_n, 0 <= r < n, 0 <= k < n. One case per (n, r, k).
LemmaReport check_rot_pointwise(std::size_t max_n);

/// rev(S T) = rev(T) rev(S) for all |S|, |T| <= max_len.
LemmaReport check_lemma_rev_cat(std::size_t max_len);

/// For |X| = |Z| = d >= 1 and |X Y Z| = N <= max_len:
///   left:  rot(X Y Z, d)     = rot(Z Y, d) X
///   right: rot(X Y Z, N - d) = Z rot(Y X, N - 2d)
/// Instances where a rotation amount equals the rotated length are skipped.
std::array<LemmaReport, 2> check_lemma_rot_swap(std::size_t max_len);

/// invert_mp(n, n - r, k) lands in range and maps back to k, for all
/// 2 <= n <= max_n, 0 < r < n, 0 <= k < n.
LemmaReport check_lemma_invert_mp(std::size_t max_n);

/// 0 <= wrap(x, y) < y and wrap(x, y) = x % y for 0 <= x <= max, 1 <= y <= max.
LemmaReport check_wrap_bounds(std::size_t max);

// ---------------------------------------------------------------------------
// Invariant-checked execution

struct InvariantViolation {
  std::string algorithm;
  std::string invariant_id;
  std::size_t iteration = 0;
  std::string detail;
};

struct InvariantInfo {
  std::string_view id;
  std::string_view statement;
};

/// Every predicate run_checked can evaluate, by id.
std::span<const InvariantInfo> registered_invariants() noexcept;
const InvariantInfo* find_invariant(std::string_view id) noexcept;

inline constexpr std::size_t kDefaultCheckLimit = 256;

class CheckLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace seqrot::verify

#include "seqrot/detail/invariant_checker.hpp"

namespace seqrot::verify {

/// Rotates `buf` by r with the named algorithm while evaluating every loop
/// invariant against a snapshot of the initial buffer at loop entry, after
/// each iteration and at exit. Returns the first violation, or nullopt.
/// Throws CheckLimitError when buf.size() > limit.
template <Element T>
  requires std::equality_comparable<T>
std::optional<InvariantViolation> run_checked(Algorithm algo, std::span<T> buf, std::size_t r,
                                              std::size_t limit = kDefaultCheckLimit) {
  if (buf.size() > limit) {
    throw CheckLimitError("run_checked: length " + std::to_string(buf.size()) + " exceeds check limit " +
                          std::to_string(limit));
  }
  detail::InvariantChecker<T> checker(algo, r);
  Counters counters;
  try {
    rotate(algo, buf, r, counters, checker);
  } catch (const detail::ViolationFound& found) {
    return found.violation;
  }
  return std::nullopt;
}

struct InvariantSuiteReport {
  std::size_t max_n = 0;
  std::uint64_t runs = 0;
  std::vector<InvariantViolation> violations;

  bool holds() const noexcept { return violations.empty(); }
};

/// run_checked for each algorithm, every 2 <= n <= max_n and 0 < r < n, on
/// distinct elements.
InvariantSuiteReport check_invariants_exhaustive(std::size_t max_n,
                                                 std::span<const Algorithm> algorithms = kAllAlgorithms);

/// `invariants bound=<n> runs=<k> violations=<v>`
std::string summary_line(const InvariantSuiteReport& report);

}  // namespace seqrot::verify
