#include <atomic>

#include "h22/errors.hpp"
#include "h22/kernels/density.hpp"

namespace h22::kernels {

namespace {

Isa detect() { return avx2_supported() ? Isa::avx2 : Isa::scalar; }

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(H22_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(); }

void force_isa(std::optional<Isa> isa) {
  if (isa == Isa::avx2 && !avx2_supported()) throw PreconditionError("AVX2 kernel requested but not supported here");
  current().store(isa.value_or(detect()));
}

void evaluate(const Couplings& c, const Batch& b) {
#if defined(H22_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return evaluate_avx2(c, b);
#endif
  evaluate_scalar(c, b);
}

}  // namespace h22::kernels
