#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace seqrot {

enum class Algorithm {
  copy,
  copy_native,
  reverse,
  swap_recursive,
  swap_iterative,
  modulo,
};

inline constexpr std::array<Algorithm, 6> kAllAlgorithms = {
    Algorithm::copy,           Algorithm::copy_native,    Algorithm::reverse,
    Algorithm::swap_recursive, Algorithm::swap_iterative, Algorithm::modulo,
};

/// The five algorithms of the benchmark table; `--algos all` selects these.
inline constexpr std::array<Algorithm, 5> kBenchAlgorithms = {
    Algorithm::copy, Algorithm::copy_native, Algorithm::reverse, Algorithm::swap_iterative,
    Algorithm::modulo,
};

/// CLI spelling: copy, copy-native, reverse, swap-rec, swap, modulo.
std::string_view algorithm_name(Algorithm algo) noexcept;

/// Accepts the CLI spelling; also accepts "swap-iterative" and "swap-recursive".
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

}  // namespace seqrot
