#include <atomic>
#include <cstdlib>
#include <cstring>

#include "padya/kernels/edit_distance.h"

namespace padya::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(PADYA_HAVE_AVX2_KERNEL) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  const char* force = std::getenv("PADYA_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0') return Isa::kScalar;
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) { return isa == Isa::kScalar || cpu_has_avx2(); }

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) isa = Isa::kScalar;
  selected().store(isa ? *isa : detect(), std::memory_order_relaxed);
}

void edit_distances(std::span<const Symbol> query, const TemplateBank& bank,
                    std::span<std::int32_t> out) {
  if (active_isa() == Isa::kAvx2) {
    edit_distances_avx2(query, bank, out);
  } else {
    edit_distances_scalar(query, bank, out);
  }
}

}  // namespace padya::kernels
