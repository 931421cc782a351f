#pragma once

#include <vector>

#include "qtt/spinchain.hpp"

namespace qtt {

// Images of the alternating generators, indexed from k = 0:
// W_minus[k] = W_{-k}, W_plus[k] = W_{k+1}, G[k] = G_{k+1}, Gtilde[k] = G~_{k+1}.
struct AlternatingOps {
  std::vector<Mat> W_minus, W_plus, G, Gtilde;
};

// Truncation data of the finite chain.
struct TruncationData {
  std::vector<cplx> d;  // d_0 ... d_N
  cplx eps_plus_N = 0.0, eps_minus_N = 0.0;
  std::vector<cplx> w0;  // w0^{(j_n)} per site
  LaurentPoly h0;
  std::vector<LaurentPoly> P;  // P_{-k}(u), k = 0..N-1
};

cplx w0(int two_j, cplx q);
std::vector<cplx> truncation_coefficients(const ChainConfig& cfg);
std::pair<cplx, cplx> truncated_eps(const ChainConfig& cfg);
TruncationData truncation_data(const ChainConfig& cfg);

// Site-by-site construction of the modes, K >= N of each family.
// Throws DiagonalBoundaryUnsupported when k_+ or k_- vanishes.
AlternatingOps alternating_ops(const ChainConfig& cfg, std::size_t K);

// Defining relations of the alternating algebra on the modes for indices k, l <= kmax,
// plus the truncation relations at level N with the mode W_{-N}, W_{N+1} obtained from the
// q-commutator relations.
std::vector<NamedResidual> aq_relations(const ChainConfig& cfg, std::size_t kmax = 2);

// I_{2k+1} images for k < K and the scalar I_0 image.
std::vector<Mat> i_modes(const ChainConfig& cfg, std::size_t K);
cplx i0_scalar(const BoundaryParams& b, cplx q);
// sum_k P_{-k}(u) I_{2k+1}
Mat psi_I(const ChainConfig& cfg, cplx u);

// t~^{(1/2)} predicted from the alternating modes and the truncation data.
Mat transfer_from_modes(const ChainConfig& cfg, cplx u);

}  // namespace qtt
