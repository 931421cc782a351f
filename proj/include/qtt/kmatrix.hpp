#pragma once

#include <vector>

#include "qtt/polymatrix.hpp"

namespace qtt {

// Parameters of one boundary: eps_+, eps_-, k_+, k_-.
struct KParams {
  cplx eps_plus = 0.0, eps_minus = 0.0, k_plus = 0.0, k_minus = 0.0;

  bool diagonal() const { return k_plus == 0.0 && k_minus == 0.0; }
  // rho = k_+ k_- (q + q^{-1})^2
  cplx rho(cplx q) const { return k_plus * k_minus * (q + 1.0 / q) * (q + 1.0 / q); }
  // Substitution used for dual objects: eps_+- -> epsbar_-+, k_+- -> -kbar_-+.
  KParams dual_swap() const { return {eps_minus, eps_plus, -k_minus, -k_plus}; }
  std::vector<double> digest() const;
};

// Left (K) and right (K+) boundaries.
struct BoundaryParams {
  KParams left;
  KParams right;  // barred parameters
  cplx rho(cplx q) const { return left.rho(q); }
};

struct KMatrix {
  int two_j = 0;
  PolyMatrix poly;
  Mat eval(cplx u) const { return poly.eval(u); }
};

struct DualKMatrix {
  int two_j = 0;
  RationalMatrix value;  // den = f^{(j)}
  Mat eval(cplx u) const { return value.eval(u); }
};

struct GammaScalars {
  LaurentPoly gamma_minus;
  LaurentPoly gamma_plus;
};

KMatrix k_fundamental(const KParams& p, cplx q);
// Fused K^{(j)}, cached per (j, parameters, q); two_j = 0 gives the 1x1 identity.
KMatrix k_fused(int two_j, const KParams& p, cplx q);
LaurentPoly f_j(int two_j, cplx q);
// K^{+(j)} from K^{(j)}(1/(uq)) transposed with the dual substitution; validated against
// the dual fusion recursion at a sample point (FusionMismatch on disagreement).
DualKMatrix k_dual(int two_j, const KParams& bar, cplx q);
Mat k_dual_recursive(int two_j, const KParams& bar, cplx u, cplx q);
// K~ = K / prod_{l=0}^{2j-2} c(u^2 q^{1-l}); remainder of the checked division is optional output.
KMatrix k_normalized(int two_j, const KParams& p, cplx q, double* remainder = nullptr);
// K~+(u) = K~(1/(uq))^t with the dual substitution.
KMatrix k_dual_normalized(int two_j, const KParams& bar, cplx q);
LaurentPoly k_tilde_divisor(int two_j, cplx q);

LaurentPoly gamma_minus(const KParams& p, cplx q);
LaurentPoly gamma_plus(const KParams& bar, cplx q);
GammaScalars gamma_scalars(const BoundaryParams& b, cplx q);
// Closed forms against the trace formulas built from the fundamental K and K+.
double gamma_minus_trace_residual(const KParams& p, cplx q);
double gamma_plus_trace_residual(const KParams& bar, cplx q);

double reflection_residual(int two_j1, int two_j2, const KParams& p, cplx u, cplx v, cplx q);
double dual_reflection_residual(int two_j1, int two_j2, const KParams& bar, cplx u, cplx v, cplx q);
double transpose_symmetry_residual(int two_j, const KParams& p, cplx q);
// Both intertwining relations as polynomial identities; eps_shift relatively perturbs eps_+
// inside the intertwined operator only (negative control).
std::vector<NamedResidual> intertwining_check(int two_j, const KParams& p, cplx q, double eps_shift = 0.0);
// Reduction of K^{(j)} to K^{(j-1/2)} through the barred maps, and its dual analog.
double reduction_residual(int two_j, const KParams& p, cplx q);
double dual_reduction_residual(int two_j, const KParams& bar, cplx q);

// Printed spin-1 K-matrix evaluated at u.
Mat k_spin1_printed(const KParams& p, cplx u, cplx q);

}  // namespace qtt
