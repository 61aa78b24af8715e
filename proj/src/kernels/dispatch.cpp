#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "syz/error.hpp"

namespace syz::kernels {

namespace {

constexpr KernelTable kScalarTable{
    &scalar::max_symplectic_pairing, &scalar::max_abs_difference, &scalar::max_hypot,
    &scalar::moment_map,             &scalar::corrected_gluing,
};

#ifdef SYZ_HAVE_AVX2
constexpr KernelTable kAvx2Table{
    &avx2::max_symplectic_pairing, &avx2::max_abs_difference, &avx2::max_hypot,
    &avx2::moment_map,             &avx2::corrected_gluing,
};
#endif

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
#if defined(SYZ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("SYZ_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") return Isa::Scalar;
    return detected_isa();
  }();
  return isa;
}

const KernelTable& table(Isa isa) {
  if (isa == Isa::Scalar) return kScalarTable;
#ifdef SYZ_HAVE_AVX2
  if (detected_isa() == Isa::Avx2) return kAvx2Table;
#endif
  throw InputError("kernel set '" + std::string(isa_name(isa)) + "' is not available on this machine");
}

}  // namespace syz::kernels
