#include "qtt/simd.hpp"

#include <atomic>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define QTT_X86 1
#endif

namespace qtt::simd {

void conv_scalar(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  for (std::size_t i = 0; i < na; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    if (ar == 0.0 && ai == 0.0) continue;
    for (std::size_t k = 0; k < nb; ++k) {
      const double br = b[k].real(), bi = b[k].imag();
      out[i + k] += cplx(ar * br - ai * bi, ar * bi + ai * br);
    }
  }
}

#ifdef QTT_X86
__attribute__((target("avx2,fma")))
void conv_avx2(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  const double* bp = reinterpret_cast<const double*>(b);
  const std::size_t pairs = nb / 2;
  for (std::size_t i = 0; i < na; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    if (ar == 0.0 && ai == 0.0) continue;
    const __m256d vr = _mm256_set1_pd(ar);
    const __m256d vi = _mm256_set1_pd(ai);
    double* op = reinterpret_cast<double*>(out + i);
    for (std::size_t p = 0; p < pairs; ++p) {
      const __m256d bv = _mm256_loadu_pd(bp + 4 * p);
      const __m256d bs = _mm256_permute_pd(bv, 0b0101);
      // even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br
      const __m256d prod = _mm256_fmaddsub_pd(vr, bv, _mm256_mul_pd(vi, bs));
      const __m256d acc = _mm256_loadu_pd(op + 4 * p);
      _mm256_storeu_pd(op + 4 * p, _mm256_add_pd(acc, prod));
    }
    for (std::size_t k = 2 * pairs; k < nb; ++k) {
      const double br = b[k].real(), bi = b[k].imag();
      out[i + k] += cplx(ar * br - ai * bi, ar * bi + ai * br);
    }
  }
}

bool avx2_available() {
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
}
#else
void conv_avx2(const cplx*, std::size_t, const cplx*, std::size_t, cplx*) {
  throw std::logic_error("AVX2 kernel not compiled for this target");
}

bool avx2_available() { return false; }
#endif

namespace {
std::atomic<int>& backend_slot() {
  static std::atomic<int> slot(avx2_available() ? static_cast<int>(Backend::Avx2)
                                                : static_cast<int>(Backend::Scalar));
  return slot;
}
}  // namespace

Backend active_backend() { return static_cast<Backend>(backend_slot().load()); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available())
    throw std::runtime_error("AVX2 backend requested but not supported by this CPU");
  backend_slot().store(static_cast<int>(b));
}

std::string backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void conv(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  if (active_backend() == Backend::Avx2)
    conv_avx2(a, na, b, nb, out);
  else
    conv_scalar(a, na, b, nb, out);
}

}  // namespace qtt::simd
