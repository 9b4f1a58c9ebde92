#include <atomic>
#include <cstdlib>
#include <string>

#include "ahs/kernels.hpp"

namespace ahs::kernels {

bool avx2_supported() {
#if defined(AHS_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend initial_backend() {
  const char* env = std::getenv("AHS_KERNELS");
  const std::string v = env ? env : "auto";
  if (v == "scalar") return Backend::scalar;
  if (v == "avx2") {
    // Honoured only when the CPU can run it; otherwise fall back rather
    // than fault on the first vector instruction.
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
  }
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) b = Backend::scalar;
  backend_slot().store(b, std::memory_order_relaxed);
}

std::string backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void conv_cplx(const Cplx* a, std::size_t na, const Cplx* b, std::size_t nb,
               Cplx* out, std::size_t nout) {
#if defined(AHS_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  if (active_backend() == Backend::avx2) {
    conv_cplx_avx2(a, na, b, nb, out, nout);
    return;
  }
#endif
  conv_cplx_scalar(a, na, b, nb, out, nout);
}

void geom_power_sums(const double* a, std::size_t count, Cplx z, Cplx* sums,
                     std::size_t nk) {
#if defined(AHS_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))
  if (active_backend() == Backend::avx2) {
    geom_power_sums_avx2(a, count, z, sums, nk);
    return;
  }
#endif
  geom_power_sums_scalar(a, count, z, sums, nk);
}

}  // namespace ahs::kernels
