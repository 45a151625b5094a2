#include "seqrot/algorithm.hpp"

namespace seqrot {

std::string_view algorithm_name(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::copy: return "copy";
    case Algorithm::copy_native: return "copy-native";
    case Algorithm::reverse: return "reverse";
    case Algorithm::swap_recursive: return "swap-rec";
    case Algorithm::swap_iterative: return "swap";
    case Algorithm::modulo: return "modulo";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (auto algo : kAllAlgorithms) {
    if (algorithm_name(algo) == name) return algo;
  }
  if (name == "swap-iterative") return Algorithm::swap_iterative;
  if (name == "swap-recursive") return Algorithm::swap_recursive;
  return std::nullopt;
}

}  // namespace seqrot
