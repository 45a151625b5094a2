#include "seqrot/rotation.hpp"

namespace seqrot {

RotationRequest normalize(std::int64_t amount, std::size_t n) noexcept {
  RotationRequest req{amount, n, 0};
  if (n == 0) return req;
  // Reduce in unsigned arithmetic so that INT64_MIN needs no negation.
  const auto un = static_cast<std::uint64_t>(n);
  if (amount >= 0) {
    req.r_left = static_cast<std::size_t>(static_cast<std::uint64_t>(amount) % un);
  } else {
    const std::uint64_t magnitude = ~static_cast<std::uint64_t>(amount) + 1;
    const std::uint64_t back = magnitude % un;
    req.r_left = static_cast<std::size_t>(back == 0 ? 0 : un - back);
  }
  return req;
}

}  // namespace seqrot
