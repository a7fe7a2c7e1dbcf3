#include <cstdlib>
#include <cstring>

#include "table_decls.hpp"

namespace calab::kernels {

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(CALAB_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& table(Isa isa) {
#if defined(CALAB_HAVE_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return detail::kAvx2Table;
#endif
  (void)isa;
  return detail::kScalarTable;
}

namespace {

Isa select_isa() {
  const char* force = std::getenv("CALAB_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0') return Isa::Scalar;
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

const KernelTable& active() {
  static const KernelTable& t = table(active_isa());
  return t;
}

}  // namespace calab::kernels
