#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qtt/kmatrix.hpp"
#include "qtt/polymatrix.hpp"
#include "qtt/rmatrix.hpp"

namespace qtt {

// Dimension cap for quantum spaces, read from QTT_DIM_CAP (default 4096).
std::size_t dimension_cap();

struct ChainConfig {
  std::vector<int> two_js;    // two_js[n-1] is the doubled spin of site n
  std::vector<cplx> inhoms;   // v_1 ... v_N
  BoundaryParams boundary;
  cplx q = default_q();

  std::size_t N() const { return two_js.size(); }
  std::size_t dim() const;
  // Throws DimensionMismatch on malformed input and DimensionGuard above the cap.
  void validate() const;
};

class Chain {
 public:
  explicit Chain(ChainConfig cfg);

  const ChainConfig& config() const { return cfg_; }
  std::size_t dim() const { return dq_; }

  // Dressed K-matrix on quantum (x) aux spaces. The K-matrix sits in aux slot aux_index;
  // lax selects Lax operators instead of the raw fused R-matrices.
  Mat dressed_in(int two_j, cplx u, const std::vector<int>& aux_dims, std::size_t aux_index, bool lax) const;
  Mat dressed(int two_j, cplx u, bool lax = true) const;

  // t^{(j)}(u) = tr_a K+(u) T(u) K(u) T^(u) with raw fused R-matrices; t^{(0)} = 1.
  Mat transfer(int two_j, cplx u) const;
  // Normalized transfer matrix assembled from R~, K~ and K~+.
  Mat transfer_tilde(int two_j, cplx u) const;
  // Scalar g with t~ = g t.
  cplx renorm_g(int two_j, cplx u) const;
  // t~ as an operator-valued Laurent numerator over a scalar denominator, recovered by
  // interpolation on the unit circle and cross-checked at an off-circle point.
  RationalMatrix transfer_tilde_poly(int two_j) const;

  // Sklyanin trace formula with Lax-dressed fundamental K.
  Mat gamma_image(cplx u) const;
  // Closed form: Gamma_-(u) prod_n c(u q^{j_n+3/2} v_n^{+-1}) c(u q^{-j_n+1/2} v_n^{+-1}).
  cplx gamma_expected(cplx u) const;

 private:
  // Per-auxiliary-spin operators, built once.
  struct AuxOps {
    std::vector<RMatrix> r;
    std::vector<LaxMatrix> lax;
    std::vector<NormalizedRMatrix> rt;
    KMatrix k, kt, ktp;
    DualKMatrix kp;
  };
  const AuxOps& ops(int two_j) const;

  ChainConfig cfg_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const AuxOps>> ops_;
  std::vector<int> qd_;  // site N first
  std::size_t dq_ = 1;
};

// Throws FactorizationFailure if the trace formula and the closed form differ at the sample.
LaurentPoly quantum_det_image(const ChainConfig& cfg, cplx sample, double tol = 1e-9);

// Relative residual of the reflection equation for two dressed K-matrices.
double dressed_reflection_residual(const Chain& ch, int two_j1, int two_j2, cplx u, cplx v);
// Coefficient of t^{(j-1)}(u/q) in the TT-relation.
cplx tt_coefficient(const ChainConfig& cfg, int two_j, cplx u);
double tt_residual(const Chain& ch, int two_j, cplx u);
// g^{(j)}(u) of the T-system on the chain.
cplx tsys_g(const ChainConfig& cfg, int two_j, cplx u);
double tsystem_residual(const Chain& ch, int two_j, cplx u);
double ysystem_residual(const Chain& ch, int two_j, cplx u);
double commutator_residual(const Mat& a, const Mat& b);

}  // namespace qtt
