#pragma once

#include <vector>

#include "qtt/alternating.hpp"

namespace qtt {

struct Hamiltonian {
  int order = 1;
  int two_j = 1;
  std::size_t N = 0;
  Mat matrix;
};

// Taylor coefficients t_0..t_n of num/den around u0, from exact polynomial derivatives.
std::vector<Mat> taylor_coefficients(const RationalMatrix& r, cplx u0, int n);
// d^n/du^n ln t(u) at u0 for n = 1..order, assuming the values of t commute.
// Throws SingularAtOne when t(u0) is numerically singular.
std::vector<Mat> log_derivatives(const RationalMatrix& r, cplx u0, int order);

ChainConfig homogeneous_config(int two_j, std::size_t N, const BoundaryParams& b, cplx q);
// H^(n) from the normalized transfer matrix of the homogeneous chain.
Hamiltonian hamiltonian(int order, int two_j, std::size_t N, const BoundaryParams& b, cplx q);

// Pauli-type operators on site `site` (1-based, site 1 rightmost) of an N-site chain of dimension d.
Mat site_op(const Mat& op, std::size_t site, std::size_t N);

// Spin-1/2 open XXZ Hamiltonian with the boundary terms written through eps, k.
// Throws DegenerateBoundary when eps_+ + eps_- vanishes on either side.
Mat hxxz_half(std::size_t N, const BoundaryParams& b, cplx q);
// Same bulk with the h-parametrization of the boundary terms.
struct HParams {
  cplx h_plus = 0.0, h_minus = 0.0, h_z = 0.0;
  cplx hbar_plus = 0.0, hbar_minus = 0.0, hbar_z = 0.0;
};
HParams h_params(const BoundaryParams& b);
Mat hxxz_param(std::size_t N, const HParams& h, cplx q);
// Spin-1 Hamiltonian with the two boundary terms.
Mat hxxz_spin1(std::size_t N, const BoundaryParams& b, cplx q);
Mat hxxz_explicit(int two_j, std::size_t N, const BoundaryParams& b, cplx q);

struct AffineFit {
  cplx alpha = 0.0, beta = 0.0;
  double residual = 0.0;
};
// Least squares H ~ alpha A + beta I.
AffineFit affine_fit(const Mat& H, const Mat& A);
// ||X - tr(X)/D I|| / ||ref|| and the scalar tr(X)/D.
double residual_mod_identity(const Mat& X, const Mat& ref, cplx* scalar = nullptr);

// Spin-1/2 Hamiltonians written through the I-operators.
struct ModeHamiltonianCheck {
  std::vector<NamedResidual> residuals;
  cplx h1_offset = 0.0;  // scalar H^(1) - printed form
  cplx h2_offset = 0.0;  // scalar H^(2) - printed form
};
ModeHamiltonianCheck h_via_I(std::size_t N, const BoundaryParams& b, cplx q);

// Normalized transfer matrix t~^{1/2} assembled from the I-operators as num/den.
RationalMatrix transfer_from_modes_poly(const ChainConfig& cfg);

struct DeltaSeries {
  std::vector<cplx> delta;        // delta_1 ... delta_K
  double nonnegative_residual = 0;  // largest coefficient at u^{>=0} after the rho/c(q) shift
  double odd_residual = 0;          // largest coefficient at odd powers of u
};
cplx delta_c(int k, cplx q);
DeltaSeries delta_series(const ChainConfig& cfg, int K);
// Printed delta_2 for one site, and its two-site update.
cplx delta2_printed_one(const ChainConfig& cfg);
cplx delta2_printed_two(const ChainConfig& cfg);

// Printed q-Onsager polynomials in W0, W1 against the alternating modes.
std::vector<NamedResidual> qonsager_reconstruct(const ChainConfig& cfg);
// The printed degree-5 polynomial for W_{-2}; reported separately.
double w_minus2_printed_residual(const ChainConfig& cfg);

}  // namespace qtt
