#include <atomic>
#include <cassert>

#include "crig/kernels.hpp"

namespace crig::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(CRIG_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar};
  return slot;
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

bool backend_available(Backend b) { return b == Backend::Scalar || cpu_has_avx2(); }

bool set_backend(Backend b) {
  if (!backend_available(b)) return false;
  backend_slot().store(b, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void apply_su11(const Su11& m, UnitPoints in, UnitPointsOut out) {
  assert(in.re.size() == in.im.size() && out.re.size() == in.re.size() && out.im.size() == in.re.size());
#if defined(CRIG_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::apply_su11(m, in, out);
#endif
  scalar::apply_su11(m, in, out);
}

void mat2_mul(Mat2Batch lhs, Mat2Batch rhs, Mat2BatchOut out) {
#if defined(CRIG_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::mat2_mul(lhs, rhs, out);
#endif
  scalar::mat2_mul(lhs, rhs, out);
}

double min_abs_trace(Mat2Batch m) {
#if defined(CRIG_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::min_abs_trace(m);
#endif
  return scalar::min_abs_trace(m);
}

}  // namespace crig::kernels
