#pragma once

#include <vector>

#include "qtt/polymatrix.hpp"

namespace qtt {

// Spin-j representation of U_q sl2, j = two_j/2. Basis index n = 0..2j has
// S3 eigenvalue 2j - 2n.
struct SpinRep {
  int two_j = 0;
  cplx q = 1.0;
  Mat splus, sminus;
  std::vector<int> s3;  // diagonal of S3

  int dim() const { return two_j + 1; }
  Mat s3_matrix() const;
  // diag(q^{a S3})
  Mat qpow_s3(double a) const;
};

// B_{j,j'} = sqrt([j+j'][j-j'+1]) with the principal square root.
cplx b_coef(int two_j, int two_jp, cplx q);

SpinRep spin_rep(int two_j, cplx q);

// Quantum-space layout: site N is the leftmost tensor factor, site 1 the rightmost.
struct SiteLayout {
  std::vector<int> dims;  // dims[0] is site N

  static SiteLayout from_spins(const std::vector<int>& two_js);  // two_js[n-1] is site n
  std::size_t total() const;
  std::size_t position(std::size_t site) const { return dims.size() - site; }
};

Mat embed_site(const Mat& op, std::size_t site, const SiteLayout& layout);

// op acts on tensor slots (a, b) of a product space with the given dims,
// row index of op = i_a * dims[b] + i_b.
template <class M>
M embed_pair(const M& op, const std::vector<int>& dims, std::size_t a, std::size_t b);

Mat permutation(int two_j);
Mat swap_matrix(int d1, int d2);

Mat partial_trace_aux(const Mat& m, std::size_t aux_dim);
PolyMatrix partial_trace_aux(const PolyMatrix& m, std::size_t aux_dim);

}  // namespace qtt
