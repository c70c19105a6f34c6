#include "gprox/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <stdexcept>
#include <string>

namespace gprox::kernels {

const KernelTable& scalar_table();
#if GPROX_HAVE_AVX2
const KernelTable& avx2_table();
#endif

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if GPROX_HAVE_AVX2
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) throw std::runtime_error(std::string("kernel ISA unavailable: ") + isa_name(isa));
  switch (isa) {
    case Isa::scalar:
      return scalar_table();
    case Isa::avx2:
#if GPROX_HAVE_AVX2
      return avx2_table();
#else
      break;
#endif
  }
  return scalar_table();
}

namespace {

Isa select() {
  if (const char* env = std::getenv("GPROX_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2") {
      if (available(Isa::avx2)) return Isa::avx2;
      std::cerr << "gprox: GPROX_KERNELS=avx2 requested but unavailable, using scalar\n";
      return Isa::scalar;
    }
    if (!want.empty() && want != "auto")
      std::cerr << "gprox: unknown GPROX_KERNELS value '" << want << "', using auto\n";
  }
  return available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select();
  return isa;
}

const KernelTable& active() { return table(active_isa()); }

}  // namespace gprox::kernels
