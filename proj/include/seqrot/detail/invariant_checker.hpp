#pragma once

// Included from verification.hpp; not a standalone header.

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seqrot/modular_index.hpp"
#include "seqrot/probe.hpp"

namespace seqrot::verify::detail {

struct ViolationFound {
  InvariantViolation violation;
};

template <class T>
struct CheckContext {
  std::size_t n = 0;
  std::size_t r = 0;
  std::span<const T> old;        // buffer at rotation entry
  std::span<const T> expected;   // oracle rotation of `old`
  std::span<const T> local_old;  // buffer at entry of the innermost routine
};

template <class S, class T>
struct Rule {
  std::string_view id;
  bool (*holds)(const S&, Checkpoint, const CheckContext<T>&);
};

// a[lo..hi) == b[b_lo..b_lo + (hi - lo))
template <class T>
bool same(std::span<const T> a, std::size_t lo, std::size_t hi, std::span<const T> b, std::size_t b_lo) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (!(a[i] == b[b_lo + (i - lo)])) return false;
  }
  return true;
}

template <class T>
bool same_outside(std::span<const T> a, std::size_t lo, std::size_t hi, std::span<const T> b) {
  return same(a, 0, lo, b, 0) && same(a, hi, a.size(), b, hi);
}

inline std::size_t cycle_index(std::size_t n, std::size_t r, std::size_t s, std::size_t k) {
  return static_cast<std::size_t>(modular::mp(static_cast<modular::index_t>(n),
                                              static_cast<modular::index_t>(n - r),
                                              static_cast<modular::index_t>(s),
                                              static_cast<modular::index_t>(k)));
}

inline std::size_t cycle_length(std::size_t n, std::size_t r) {
  return static_cast<std::size_t>(
      modular::tau(static_cast<modular::index_t>(n), static_cast<modular::index_t>(n - r)));
}

inline std::size_t cycle_count(std::size_t n, std::size_t r) {
  return static_cast<std::size_t>(
      modular::gcd_sub(static_cast<modular::index_t>(n), static_cast<modular::index_t>(n - r)));
}

// --- rotation by copy ------------------------------------------------------

template <class T>
std::span<const Rule<CopyLoopState<T>, T>> rules(const CopyLoopState<T>*) {
  using S = CopyLoopState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"copy.s_bounds", [](const S& s, Checkpoint, const C& c) { return s.s <= c.n; }},
      {"copy.d_tracks_s", [](const S& s, Checkpoint, const C& c) { return s.d == (s.s + c.n - c.r) % c.n; }},
      {"copy.placed",
       [](const S& s, Checkpoint, const C& c) {
         for (std::size_t i = 0; i < s.s; ++i) {
           if (!(s.a[i] == s.scratch[(i + c.n - c.r) % c.n])) return false;
         }
         return true;
       }},
      {"copy.source_intact", [](const S& s, Checkpoint, const C& c) { return same(s.a, 0, c.n, c.old, 0); }},
  };
  return table;
}

template <class T>
std::string describe(const CopyLoopState<T>& s) {
  std::ostringstream os;
  os << "r=" << s.r << " s=" << s.s << " d=" << s.d;
  return os.str();
}

template <class T>
std::size_t ordinal(const CopyLoopState<T>& s) {
  return s.iteration;
}

// --- rotation by copy with short scratch -------------------------------------

template <class T>
std::span<const Rule<CopyNativeState<T>, T>> rules(const CopyNativeState<T>*) {
  using S = CopyNativeState<T>;
  using C = CheckContext<T>;
  using Stage = typename S::Stage;
  static const Rule<S, T> table[] = {
      {"native.scratch_size",
       [](const S& s, Checkpoint, const C& c) { return s.scratch.size() == std::min(c.r, c.n - c.r); }},
      {"native.saved",
       [](const S& s, Checkpoint, const C& c) {
         const std::size_t from = c.r <= c.n - c.r ? 0 : c.r;
         return same(s.scratch, 0, s.scratch.size(), c.old, from);
       }},
      {"native.shifted",
       [](const S& s, Checkpoint, const C& c) {
         if (s.stage == Stage::saved) return true;
         if (c.r <= c.n - c.r) return same(s.a, 0, c.n - c.r, c.old, c.r);
         return same(s.a, c.n - c.r, c.n, c.old, 0);
       }},
      {"native.restored",
       [](const S& s, Checkpoint, const C& c) {
         return s.stage != Stage::restored || same(s.a, 0, c.n, c.expected, 0);
       }},
  };
  return table;
}

template <class T>
std::string describe(const CopyNativeState<T>& s) {
  std::ostringstream os;
  os << "r=" << s.r << " stage=" << static_cast<int>(s.stage) << " scratch=" << s.scratch.size();
  return os.str();
}

template <class T>
std::size_t ordinal(const CopyNativeState<T>& s) {
  return static_cast<std::size_t>(s.stage) + 1;
}

// --- in-place reversal -------------------------------------------------------

template <class T>
std::span<const Rule<ReverseLoopState<T>, T>> rules(const ReverseLoopState<T>*) {
  using S = ReverseLoopState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"reverse.bounds",
       [](const S& s, Checkpoint, const C&) {
         const auto low = static_cast<std::ptrdiff_t>(s.low);
         const auto high = static_cast<std::ptrdiff_t>(s.high);
         return low <= s.p && s.p <= s.q + 2 && s.q + 2 <= high + 1;
       }},
      {"reverse.mirror",
       [](const S& s, Checkpoint, const C&) {
         return s.q == static_cast<std::ptrdiff_t>(s.high + s.low) - 1 - s.p;
       }},
      {"reverse.swapped",
       [](const S& s, Checkpoint, const C& c) {
         const std::size_t mirror = s.high + s.low - 1;
         for (auto i = static_cast<std::ptrdiff_t>(s.low); i < s.p; ++i) {
           const auto k = static_cast<std::size_t>(i);
           if (!(c.local_old[k] == s.a[mirror - k])) return false;
         }
         for (auto i = std::max<std::ptrdiff_t>(s.q + 1, 0); i < static_cast<std::ptrdiff_t>(s.high); ++i) {
           const auto k = static_cast<std::size_t>(i);
           if (!(c.local_old[k] == s.a[mirror - k])) return false;
         }
         return true;
       }},
      {"reverse.frame",
       [](const S& s, Checkpoint, const C& c) { return same_outside(s.a, s.low, s.high, c.local_old); }},
  };
  return table;
}

template <class T>
std::string describe(const ReverseLoopState<T>& s) {
  std::ostringstream os;
  os << "low=" << s.low << " high=" << s.high << " p=" << s.p << " q=" << s.q;
  return os.str();
}

template <class T>
std::size_t ordinal(const ReverseLoopState<T>& s) {
  return s.iteration;
}

// --- rotation by three reversals ---------------------------------------------

template <class T>
std::span<const Rule<ReverseRotateState<T>, T>> rules(const ReverseRotateState<T>*) {
  using S = ReverseRotateState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"reverse_rotate.stage",
       [](const S& s, Checkpoint, const C& c) {
         if (s.stage == 3) return same(s.a, 0, c.n, c.expected, 0);
         // rev(X) then, from stage 2 on, rev(Y); X = old[0..r), Y = old[r..n).
         for (std::size_t i = 0; i < c.r; ++i) {
           if (!(s.a[i] == c.old[c.r - 1 - i])) return false;
         }
         for (std::size_t i = c.r; i < c.n; ++i) {
           const std::size_t from = s.stage == 1 ? i : c.n - 1 - (i - c.r);
           if (!(s.a[i] == c.old[from])) return false;
         }
         return true;
       }},
  };
  return table;
}

template <class T>
std::string describe(const ReverseRotateState<T>& s) {
  return "r=" + std::to_string(s.r) + " stage=" + std::to_string(s.stage);
}

template <class T>
std::size_t ordinal(const ReverseRotateState<T>& s) {
  return static_cast<std::size_t>(s.stage);
}

// --- swap of equal-length sections -------------------------------------------

template <class T>
std::span<const Rule<SwapSectionsLoopState<T>, T>> rules(const SwapSectionsLoopState<T>*) {
  using S = SwapSectionsLoopState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"swap.bounds",
       [](const S& s, Checkpoint, const C&) {
         return s.low <= s.x && s.x <= s.low + s.d && s.high - s.d <= s.z && s.z <= s.high;
       }},
      {"swap.lockstep", [](const S& s, Checkpoint, const C&) { return s.x - s.low == s.z - (s.high - s.d); }},
      {"swap.sections",
       [](const S& s, Checkpoint, const C& c) {
         const std::size_t right = s.high - s.d;
         return same(s.a, s.low, s.x, c.local_old, right) && same(s.a, s.x, right, c.local_old, s.x) &&
                same(s.a, right, s.z, c.local_old, s.low) && same(s.a, s.z, s.high, c.local_old, s.z);
       }},
      {"swap.frame",
       [](const S& s, Checkpoint, const C& c) { return same_outside(s.a, s.low, s.high, c.local_old); }},
  };
  return table;
}

template <class T>
std::string describe(const SwapSectionsLoopState<T>& s) {
  std::ostringstream os;
  os << "low=" << s.low << " high=" << s.high << " d=" << s.d << " x=" << s.x << " z=" << s.z;
  return os.str();
}

template <class T>
std::size_t ordinal(const SwapSectionsLoopState<T>& s) {
  return s.iteration;
}

// --- recursive block swap helper ---------------------------------------------

template <class T>
std::span<const Rule<SwapHelperState<T>, T>> rules(const SwapHelperState<T>*) {
  using S = SwapHelperState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"helper.pre",
       [](const S& s, Checkpoint, const C& c) { return s.low <= s.p && s.p < s.high && s.high <= c.n; }},
      {"helper.post",
       [](const S& s, Checkpoint at, const C& c) {
         if (at != Checkpoint::exit) return true;
         const std::size_t len = s.high - s.low;
         const std::size_t shift = s.p - s.low;
         for (std::size_t j = 0; j < len; ++j) {
           if (!(s.a[s.low + j] == c.local_old[s.low + (j + shift) % len])) return false;
         }
         return true;
       }},
      {"helper.frame",
       [](const S& s, Checkpoint, const C& c) { return same_outside(s.a, s.low, s.high, c.local_old); }},
  };
  return table;
}

template <class T>
std::string describe(const SwapHelperState<T>& s) {
  std::ostringstream os;
  os << "low=" << s.low << " p=" << s.p << " high=" << s.high << " depth=" << s.depth;
  return os.str();
}

template <class T>
std::size_t ordinal(const SwapHelperState<T>& s) {
  return s.depth;
}

// --- iterative block swap ----------------------------------------------------

template <class T>
std::span<const Rule<SwapIterativeLoopState<T>, T>> rules(const SwapIterativeLoopState<T>*) {
  using S = SwapIterativeLoopState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"swap_iter.bounds",
       [](const S& s, Checkpoint, const C& c) { return s.low <= s.p && s.p <= s.high && s.high <= c.n; }},
      {"swap_iter.empty_iff", [](const S& s, Checkpoint, const C&) { return (s.low == s.p) == (s.p == s.high); }},
      {"swap_iter.placed",
       [](const S& s, Checkpoint, const C& c) {
         return same(s.a, 0, s.low, c.expected, 0) && same(s.a, s.high, c.n, c.expected, s.high);
       }},
      {"swap_iter.pending",
       [](const S& s, Checkpoint, const C& c) {
         if (!(s.p - s.low < s.high - s.low)) return true;
         const std::size_t len = s.high - s.low;
         const std::size_t shift = s.p - s.low;
         for (std::size_t i = s.low; i < s.high; ++i) {
           if (!(s.a[s.low + (i - s.low + shift) % len] == c.expected[i])) return false;
         }
         return true;
       }},
  };
  return table;
}

template <class T>
std::string describe(const SwapIterativeLoopState<T>& s) {
  std::ostringstream os;
  os << "r=" << s.r << " low=" << s.low << " p=" << s.p << " high=" << s.high;
  return os.str();
}

template <class T>
std::size_t ordinal(const SwapIterativeLoopState<T>& s) {
  return s.iteration;
}

// --- modular visit -----------------------------------------------------------

template <class T>
bool cycles_placed(std::span<const T> a, std::size_t start, const CheckContext<T>& c) {
  const std::size_t len = cycle_length(c.n, c.r);
  for (std::size_t s = 0; s < start; ++s) {
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t p = cycle_index(c.n, c.r, s, i);
      if (!(a[p] == c.expected[p])) return false;
    }
  }
  return true;
}

template <class T>
std::span<const Rule<ModuloOuterState<T>, T>> rules(const ModuloOuterState<T>*) {
  using S = ModuloOuterState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"modulo.moved_bounds", [](const S& s, Checkpoint, const C& c) { return s.moved <= c.n; }},
      {"modulo.start_bounds", [](const S& s, Checkpoint, const C& c) { return s.start <= cycle_count(c.n, c.r); }},
      {"modulo.moved_count",
       [](const S& s, Checkpoint, const C& c) { return s.moved == s.start * cycle_length(c.n, c.r); }},
      {"modulo.cycles_placed", [](const S& s, Checkpoint, const C& c) { return cycles_placed(s.a, s.start, c); }},
  };
  return table;
}

template <class T>
std::string describe(const ModuloOuterState<T>& s) {
  std::ostringstream os;
  os << "r=" << s.r << " start=" << s.start << " moved=" << s.moved;
  return os.str();
}

template <class T>
std::size_t ordinal(const ModuloOuterState<T>& s) {
  return s.iteration;
}

template <class T>
std::int64_t cycle_progress(const ModuloInnerState<T>& s, const CheckContext<T>& c) {
  return static_cast<std::int64_t>(s.moved) -
         static_cast<std::int64_t>(s.start) * static_cast<std::int64_t>(cycle_length(c.n, c.r));
}

template <class T>
std::span<const Rule<ModuloInnerState<T>, T>> rules(const ModuloInnerState<T>*) {
  using S = ModuloInnerState<T>;
  using C = CheckContext<T>;
  static const Rule<S, T> table[] = {
      {"modulo.progress_bounds",
       [](const S& s, Checkpoint, const C& c) {
         const std::int64_t k = cycle_progress(s, c);
         return 0 < k && k <= static_cast<std::int64_t>(cycle_length(c.n, c.r));
       }},
      {"modulo.v_position",
       [](const S& s, Checkpoint, const C& c) {
         return s.v == cycle_index(c.n, c.r, s.start, static_cast<std::size_t>(cycle_progress(s, c)));
       }},
      {"modulo.displaced", [](const S& s, Checkpoint, const C& c) { return *s.displaced == c.old[s.v]; }},
      {"modulo.cycles_placed", [](const S& s, Checkpoint, const C& c) { return cycles_placed(s.a, s.start, c); }},
      {"modulo.current_cycle",
       [](const S& s, Checkpoint, const C& c) {
         const auto k = static_cast<std::size_t>(cycle_progress(s, c));
         for (std::size_t j = 1; j <= k; ++j) {
           const std::size_t q = cycle_index(c.n, c.r, s.start, j);
           if (!(s.a[q] == c.expected[q])) return false;
         }
         return true;
       }},
  };
  return table;
}

template <class T>
std::string describe(const ModuloInnerState<T>& s) {
  std::ostringstream os;
  os << "r=" << s.r << " start=" << s.start << " moved=" << s.moved << " v=" << s.v;
  return os.str();
}

template <class T>
std::size_t ordinal(const ModuloInnerState<T>& s) {
  return s.iteration;
}

// --- the probe ---------------------------------------------------------------

inline std::string_view checkpoint_name(Checkpoint at) {
  switch (at) {
    case Checkpoint::entry: return "entry";
    case Checkpoint::iteration: return "iteration";
    case Checkpoint::exit: return "exit";
  }
  return "?";
}

template <class T>
class InvariantChecker {
 public:
  static constexpr bool enabled = true;

  InvariantChecker(Algorithm algo, std::size_t r) : algo_(algo), r_(r) {}

  void enter(Routine routine, std::span<const T> a) {
    if (routine == Routine::rotate) {
      old_.assign(a.begin(), a.end());
      expected_ = oracle_rotate(std::span<const T>(old_), static_cast<std::int64_t>(r_));
    } else {
      locals_.emplace_back(a.begin(), a.end());
    }
  }

  void leave(Routine routine, std::span<const T> a) {
    if (routine == Routine::rotate) {
      if (!same(a, 0, a.size(), std::span<const T>(expected_), 0)) {
        fail("rotate.post", 0, "n=" + std::to_string(a.size()) + " r=" + std::to_string(r_));
      }
    } else {
      locals_.pop_back();
    }
  }

  template <class State>
  void observe(Checkpoint at, const State& state) {
    const CheckContext<T> ctx{old_.size(), r_, old_, expected_,
                              locals_.empty() ? std::span<const T>(old_) : std::span<const T>(locals_.back())};
    for (const auto& rule : rules(&state)) {
      if (!rule.holds(state, at, ctx)) {
        fail(rule.id, ordinal(state), std::string(checkpoint_name(at)) + ": " + describe(state));
      }
    }
  }

 private:
  [[noreturn]] void fail(std::string_view id, std::size_t iteration, const std::string& where) const {
    const InvariantInfo* info = find_invariant(id);
    std::string detail = where;
    if (info != nullptr) detail = std::string(info->statement) + " [" + where + "]";
    throw ViolationFound{
        InvariantViolation{std::string(algorithm_name(algo_)), std::string(id), iteration, std::move(detail)}};
  }

  Algorithm algo_;
  std::size_t r_;
  std::vector<T> old_;
  std::vector<T> expected_;
  std::vector<std::vector<T>> locals_;
};

}  // namespace seqrot::verify::detail
