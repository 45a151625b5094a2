#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "seqrot/kernels.hpp"

namespace seqrot::kernels {
namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::swap_ranges, &scalar::reverse_range};
#if defined(SEQROT_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::swap_ranges, &avx2::reverse_range};
#endif

const KernelTable* initial_table() noexcept {
  Isa isa = detected_isa();
  if (const char* env = std::getenv("SEQROT_ISA")) {
    const std::string_view want(env);
    if (want == "scalar") isa = Isa::scalar;
    else if (want == "avx2" && isa_available(Isa::avx2)) isa = Isa::avx2;
  }
  return &table(isa);
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> ptr{initial_table()};
  return ptr;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(SEQROT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const KernelTable& table(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
  }
#if defined(SEQROT_HAVE_AVX2)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

Isa active_isa() noexcept { return active().isa; }

void set_active_isa(Isa isa) { current().store(&table(isa), std::memory_order_relaxed); }

}  // namespace seqrot::kernels
