#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace qtt::simd {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

// out[i+k] += a[i]*b[k]; out must hold na+nb-1 entries.
void conv_scalar(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);

// Same contract as conv_scalar. Only callable when avx2_available().
void conv_avx2(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);

bool avx2_available();

// Backend chosen at first use from CPU features, overridable for tests.
Backend active_backend();
void set_backend(Backend b);
std::string backend_name(Backend b);

void conv(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);

}  // namespace qtt::simd
