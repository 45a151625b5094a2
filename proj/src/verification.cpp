#include "seqrot/verification.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "seqrot/modular_index.hpp"

namespace seqrot::verify {
namespace {

using Seq = std::vector<int>;

// Distinct elements base, base + 1, ..., base + len - 1.
Seq iota_seq(std::size_t len, int base = 0) {
  Seq s(len);
  std::iota(s.begin(), s.end(), base);
  return s;
}

Seq cat(const Seq& s, const Seq& t) {
  Seq out(s.size() + t.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = k < s.size() ? s[k] : t[k - s.size()];
  return out;
}

Seq rev(const Seq& s) {
  Seq out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = s[s.size() - 1 - k];
  return out;
}

// Rotation defined only for 0 <= r < |s|.
std::optional<Seq> rot(const Seq& s, std::size_t r) {
  if (r >= s.size()) return std::nullopt;
  return oracle_rotate(std::span<const int>(s), static_cast<std::int64_t>(r));
}

std::string show(const Seq& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

LemmaReport start_report(LemmaId id, std::size_t bound) {
  LemmaReport report;
  report.lemma = id;
  report.domain_bound = bound;
  return report;
}

constexpr std::size_t kMaxRecordedFailures = 64;

void record(LemmaReport& report, std::string witness, std::string expected, std::string actual) {
  if (report.failures.size() < kMaxRecordedFailures) {
    report.failures.push_back({std::move(witness), std::move(expected), std::move(actual)});
  }
}

constexpr InvariantInfo kInvariants[] = {
    {"rotate.post", "on return a = rot(old a, r)"},
    {"copy.s_bounds", "0 <= s <= N"},
    {"copy.d_tracks_s", "d = (s + N - r) mod N"},
    {"copy.placed", "forall 0 <= i < s: a[i] = b[(i + N - r) mod N]"},
    {"copy.source_intact", "a = old a while filling b"},
    {"native.scratch_size", "|scratch| = min(r, N - r)"},
    {"native.saved", "scratch holds the shorter block of old a"},
    {"native.shifted", "the longer block of old a sits at its rotated position"},
    {"native.restored", "after restoring scratch a = rot(old a, r)"},
    {"reverse.bounds", "low <= p <= q + 2 <= high + 1"},
    {"reverse.mirror", "q = high + low - 1 - p"},
    {"reverse.swapped",
     "forall low <= i < p or q < i < high: (old a)[i] = a[high + low - 1 - i]"},
    {"reverse.frame", "a outside [low, high) unchanged"},
    {"reverse_rotate.stage", "after reversal k: rev(X) Y, rev(X) rev(Y), Y X"},
    {"swap.bounds", "low <= x <= low + d and high - d <= z <= high"},
    {"swap.lockstep", "x - low = z - (high - d)"},
    {"swap.sections",
     "a[low..x) = old[high-d..z), a[x..high-d) = old[x..high-d), a[high-d..z) = old[low..x), "
     "a[z..high) = old[z..high)"},
    {"swap.frame", "a outside [low, high) unchanged"},
    {"helper.pre", "0 <= low <= p < high <= N"},
    {"helper.post", "a[low..high) = rot(old a[low..high), p - low)"},
    {"helper.frame", "a outside [low, high) unchanged"},
    {"swap_iter.bounds", "0 <= low <= p <= high <= N"},
    {"swap_iter.empty_iff", "low = p <=> p = high"},
    {"swap_iter.placed", "a[0..low) and a[high..N) equal rot(old a, r) there"},
    {"swap_iter.pending",
     "p - low < high - low => forall low <= i < high: rot(a[low..high), p - low)[i - low] = rot(old a, r)[i]"},
    {"modulo.moved_bounds", "0 <= moved <= N"},
    {"modulo.start_bounds", "0 <= start <= gcd(N, N - r)"},
    {"modulo.moved_count", "moved = start * tau(N, N - r)"},
    {"modulo.cycles_placed", "every cycle started below `start` is in rotated position"},
    {"modulo.progress_bounds", "0 < moved - start * tau <= tau"},
    {"modulo.v_position", "v = mp(start, moved - start * tau)"},
    {"modulo.displaced", "displaced = (old a)[v]"},
    {"modulo.current_cycle", "forall 0 < j <= moved - start * tau: a[mp(start, j)] in rotated position"},
};

}  // namespace

std::string_view lemma_name(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::rev_cat: return "rev_cat";
    case LemmaId::rot_swap_left: return "rot_swap_left";
    case LemmaId::rot_swap_right: return "rot_swap_right";
    case LemmaId::invert_mp: return "invert_mp";
    case LemmaId::rot_pointwise: return "rot_pointwise";
    case LemmaId::wrap_bounds: return "wrap_bounds";
  }
  return "?";
}

std::string summary_line(const LemmaReport& report) {
  std::ostringstream os;
  os << lemma_name(report.lemma) << " bound=" << report.domain_bound << " cases=" << report.cases
     << " skipped=" << report.skipped << " failures=" << report.failures.size();
  return os.str();
}

void write_report(std::ostream& os, const LemmaReport& report, std::size_t max_failures) {
  os << summary_line(report) << '\n';
  const std::size_t shown = std::min(max_failures, report.failures.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& f = report.failures[i];
    os << "  witness: " << f.witness << " expected: " << f.expected << " actual: " << f.actual << '\n';
  }
}

LemmaReport check_rot_pointwise(std::size_t max_n) {
  using modular::index_t;
  LemmaReport report = start_report(LemmaId::rot_pointwise, max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Seq s = iota_seq(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Seq rotated = *rot(s, r);
      for (std::size_t k = 0; k < n; ++k) {
        ++report.cases;
        const auto ni = static_cast<index_t>(n);
        const auto ri = static_cast<index_t>(r);
        const auto ki = static_cast<index_t>(k);
        const auto src = static_cast<std::size_t>(modular::src_index(ki, ni, ri));
        const auto dst = static_cast<std::size_t>(modular::dest_index(ki, ni, ri));
        if (rotated[k] != s[src] || s[k] != rotated[dst]) {
          record(report, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k),
                 "rot[k]=" + std::to_string(rotated[k]) + " S[k]=" + std::to_string(s[k]),
                 "S[src]=" + std::to_string(s[src]) + " rot[dest]=" + std::to_string(rotated[dst]));
        }
      }
    }
  }
  return report;
}

LemmaReport check_lemma_rev_cat(std::size_t max_len) {
  LemmaReport report = start_report(LemmaId::rev_cat, max_len);
  for (std::size_t ls = 0; ls <= max_len; ++ls) {
    for (std::size_t lt = 0; lt <= max_len; ++lt) {
      ++report.cases;
      const Seq s = iota_seq(ls);
      const Seq t = iota_seq(lt, static_cast<int>(ls));
      const Seq lhs = rev(cat(s, t));
      const Seq rhs = cat(rev(t), rev(s));
      if (lhs != rhs) record(report, "S=" + show(s) + " T=" + show(t), show(rhs), show(lhs));
    }
  }
  return report;
}

std::array<LemmaReport, 2> check_lemma_rot_swap(std::size_t max_len) {
  LemmaReport left = start_report(LemmaId::rot_swap_left, max_len);
  LemmaReport right = start_report(LemmaId::rot_swap_right, max_len);
  for (std::size_t d = 1; 2 * d <= max_len; ++d) {
    for (std::size_t ly = 0; 2 * d + ly <= max_len; ++ly) {
      const std::size_t n = 2 * d + ly;
      const Seq x = iota_seq(d);
      const Seq y = iota_seq(ly, static_cast<int>(d));
      const Seq z = iota_seq(d, static_cast<int>(d + ly));
      const Seq xyz = cat(cat(x, y), z);
      const std::string witness = "X=" + show(x) + " Y=" + show(y) + " Z=" + show(z);

      const auto lhs_left = rot(xyz, d);
      const auto inner_left = rot(cat(z, y), d);
      if (!lhs_left || !inner_left) {
        ++left.skipped;
      } else {
        ++left.cases;
        const Seq rhs = cat(*inner_left, x);
        if (*lhs_left != rhs) record(left, witness, show(rhs), show(*lhs_left));
      }

      const auto lhs_right = rot(xyz, n - d);
      const auto inner_right = rot(cat(y, x), n - 2 * d);
      if (!lhs_right || !inner_right) {
        ++right.skipped;
      } else {
        ++right.cases;
        const Seq rhs = cat(z, *inner_right);
        if (*lhs_right != rhs) record(right, witness, show(rhs), show(*lhs_right));
      }
    }
  }
  return {std::move(left), std::move(right)};
}

LemmaReport check_lemma_invert_mp(std::size_t max_n) {
  using modular::index_t;
  LemmaReport report = start_report(LemmaId::invert_mp, max_n);
  for (index_t n = 2; n <= static_cast<index_t>(max_n); ++n) {
    for (index_t r = 1; r < n; ++r) {
      const index_t m = n - r;
      const index_t g = std::gcd(n, m);
      const index_t len = n / g;
      for (index_t k = 0; k < n; ++k) {
        ++report.cases;
        const auto pos = modular::invert_mp(n, m, k);
        // Walk the cycle independently of mp().
        index_t v = pos.start;
        for (index_t i = 0; i < pos.step; ++i) v = (v + m) % n;
        const bool ok = pos.start >= 0 && pos.start < g && pos.step >= 0 && pos.step < len && v == k;
        if (!ok) {
          record(report, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k),
                 "mp(start, step) = k with start < " + std::to_string(g) + ", step < " + std::to_string(len),
                 "start=" + std::to_string(pos.start) + " step=" + std::to_string(pos.step) +
                     " lands at " + std::to_string(v));
        }
      }
    }
  }
  return report;
}

LemmaReport check_wrap_bounds(std::size_t max) {
  using modular::index_t;
  LemmaReport report = start_report(LemmaId::wrap_bounds, max);
  for (index_t y = 1; y <= static_cast<index_t>(max); ++y) {
    for (index_t x = 0; x <= static_cast<index_t>(max); ++x) {
      ++report.cases;
      const index_t w = modular::wrap(x, y);
      if (w < 0 || w >= y || w != x % y) {
        record(report, "x=" + std::to_string(x) + " y=" + std::to_string(y), std::to_string(x % y),
               std::to_string(w));
      }
    }
  }
  return report;
}

std::span<const InvariantInfo> registered_invariants() noexcept { return kInvariants; }

const InvariantInfo* find_invariant(std::string_view id) noexcept {
  for (const auto& info : kInvariants) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

InvariantSuiteReport check_invariants_exhaustive(std::size_t max_n, std::span<const Algorithm> algorithms) {
  InvariantSuiteReport report;
  report.max_n = max_n;
  for (Algorithm algo : algorithms) {
    for (std::size_t n = 2; n <= max_n; ++n) {
      const Seq initial = iota_seq(n);
      for (std::size_t r = 1; r < n; ++r) {
        Seq buf = initial;
        ++report.runs;
        if (auto violation = run_checked(algo, std::span<int>(buf), r, std::max(max_n, kDefaultCheckLimit))) {
          report.violations.push_back(std::move(*violation));
        }
      }
    }
  }
  return report;
}

std::string summary_line(const InvariantSuiteReport& report) {
  std::ostringstream os;
  os << "invariants bound=" << report.max_n << " runs=" << report.runs
     << " violations=" << report.violations.size();
  return os.str();
}

}  // namespace seqrot::verify
