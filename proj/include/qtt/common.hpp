#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qtt {

using cplx = std::complex<double>;

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FusionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FactorizationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DiagonalBoundaryUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularAtOne : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateBoundary : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SamplePole : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SeriesDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoIdempotentScaling : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedResidual {
  std::string name;
  double residual;
};

// Principal branch: q^x = exp(x log q).
inline cplx qpow(cplx q, double x) {
  if (x == 0.0) return 1.0;
  return std::exp(x * std::log(q));
}

// c(x) = x - 1/x
inline cplx cfun(cplx x) { return x - 1.0 / x; }

// [n]_q, with the q = 1 limit n.
inline cplx qnum(double n, cplx q) {
  if (std::abs(q - 1.0) < 1e-15) return n;
  return (qpow(q, n) - qpow(q, -n)) / (q - 1.0 / q);
}

// Two times a spin, so that every spin is an integer.
inline int dim_of(int two_j) { return two_j + 1; }

inline cplx default_q() { return std::polar(0.83, 0.41); }

}  // namespace qtt
