#include <cstring>

#include "seqrot/kernels.hpp"

namespace seqrot::kernels::scalar {

void swap_ranges(std::byte* a, std::byte* b, std::size_t bytes) noexcept {
  for (std::size_t i = 0; i < bytes; ++i) {
    const std::byte t = a[i];
    a[i] = b[i];
    b[i] = t;
  }
}

void reverse_range(std::byte* first, std::size_t count, std::size_t elem_size) noexcept {
  if (count < 2) return;
  std::byte tmp[16];
  std::byte* p = first;
  std::byte* q = first + (count - 1) * elem_size;
  while (p < q) {
    std::memcpy(tmp, p, elem_size);
    std::memcpy(p, q, elem_size);
    std::memcpy(q, tmp, elem_size);
    p += elem_size;
    q -= elem_size;
  }
}

}  // namespace seqrot::kernels::scalar
