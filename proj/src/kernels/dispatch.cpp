#include <cstdlib>
#include <string>

#include "dgsp/kernels.hpp"

namespace dgsp::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  return isa == Isa::kAvx2 && isa_supported(Isa::kAvx2) ? avx2_table() : scalar_table();
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("DGSP_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") return Isa::kScalar;
    return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  }();
  return isa;
}

const KernelTable& active() {
  static const KernelTable& chosen = table(active_isa());
  return chosen;
}

}  // namespace dgsp::kernels
