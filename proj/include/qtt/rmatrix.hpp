#pragma once

#include "qtt/polymatrix.hpp"

namespace qtt {

// R^{(j1,j2)}(u) acting on C^{2j1+1} (x) C^{2j2+1}; spins are stored doubled.
struct RMatrix {
  int two_j1 = 0, two_j2 = 0;
  PolyMatrix poly;
  Mat eval(cplx u) const { return poly.eval(u); }
};

// R~ = M / den with den = prod_{k<2j1} c(u q^{j1+j2-k}).
struct NormalizedRMatrix {
  int two_j1 = 0, two_j2 = 0;
  PolyMatrix M;
  LaurentPoly den;
  double remainder = 0.0;  // worst relative remainder of the checked division
  Mat eval(cplx u) const { return M.eval(u) / den.eval(u); }
};

struct LaxMatrix {
  int two_jn = 0, two_j = 0;
  PolyMatrix poly;
  LaurentPoly divisor;
  double remainder = 0.0;
  Mat eval(cplx u) const { return poly.eval(u); }
};

RMatrix r_fundamental(cplx q);
// Closed form of R^{(1/2,j)}; two_j = 0 gives the 2x2 identity.
PolyMatrix r_half_closed(int two_j, cplx q);
// R^{(1/2,j)} from R^{(1/2,j-1/2)} and R^{(1/2,1/2)} through the spin-j intertwiners.
PolyMatrix r_half_recursive(int two_j, cplx q);
// Closed form, validated against the recursion; throws FusionMismatch on disagreement.
RMatrix r_half_j(int two_j, cplx q);
// Fused R^{(j1,j2)}, cached per (j1, j2, q).
RMatrix r_fused(int two_j1, int two_j2, cplx q);
NormalizedRMatrix r_normalized(int two_j1, int two_j2, cplx q);
// Evaluated Lax operator L^{(jn,j)} from the fused R by checked division.
LaxMatrix lax(int two_jn, int two_j, cplx q);
// (pi^{jn} (x) id) of the fundamental Lax operator, built from the U_q sl2 generators.
PolyMatrix lax_direct_half(int two_jn, cplx q);

// Full-product divisor of R~: prod_{k<2j1, l<2j2} c(u q^{j1+j2-k-l}).
LaurentPoly r_tilde_divisor(int two_j1, int two_j2, cplx q);

// beta^{(j)}(u) for R^{(1/2,j)}(u) R^{(1/2,j)}(1/u).
LaurentPoly beta_half(int two_j, cplx q);
// Unitarity scalar of R^{(j1,j2)}, including the sign (-1)^{4 j1 j2}.
LaurentPoly beta_pair(int two_j1, int two_j2, cplx q);
// Unsigned double product as printed for the general unitarity scalar.
LaurentPoly beta_pair_printed(int two_j1, int two_j2, cplx q);
LaurentPoly xi_half(int two_j, cplx q);

// Partial transpose on the first factor of a d1 x d2 bipartite matrix.
Mat transpose_first(const Mat& m, int d1, int d2);
PolyMatrix transpose_first(const PolyMatrix& m, int d1, int d2);

double ybe_residual(int two_j1, int two_j2, int two_j3, cplx u1, cplx u2, cplx q);
// Polynomial identities in u.
double unitarity_residual(int two_j1, int two_j2, cplx q);
double unitarity_residual_printed(int two_j1, int two_j2, cplx q);
double crossing_residual(int two_j, cplx q);
double symmetry_residual(int two_j1, int two_j2, cplx q);
// R^{(1/2,j)}(u/v) L1(u) L2(v) = L2(v) L1(u) R^{(1/2,j)}(u/v) on C^{2jn+1} (x) C^2 (x) C^{2j+1}.
double rll_residual(int two_jn, int two_j, cplx u, cplx v, cplx q);

}  // namespace qtt
