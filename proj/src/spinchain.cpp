#include "qtt/spinchain.hpp"

#include <cstdlib>
#include <numbers>

#include "qtt/repspace.hpp"
#include "qtt/rmatrix.hpp"

namespace qtt {

std::size_t dimension_cap() {
  if (const char* env = std::getenv("QTT_DIM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::size_t ChainConfig::dim() const {
  std::size_t d = 1;
  for (int tj : two_js) d *= static_cast<std::size_t>(tj + 1);
  return d;
}

void ChainConfig::validate() const {
  if (inhoms.size() != two_js.size()) throw DimensionMismatch("chain: one inhomogeneity per site is required");
  for (int tj : two_js)
    if (tj < 1) throw DimensionMismatch("chain: site spins must be positive half-integers");
  for (cplx v : inhoms)
    if (std::abs(v) == 0.0) throw DimensionMismatch("chain: inhomogeneities must be nonzero");
  const std::size_t cap = dimension_cap();
  std::size_t d = 1;
  for (int tj : two_js) {
    d *= static_cast<std::size_t>(tj + 1);
    if (d > cap) throw DimensionGuard("chain: quantum space dimension exceeds " + std::to_string(cap));
  }
}

namespace {

Mat embed_one(const Mat& op, const std::vector<int>& dims, std::size_t pos) {
  std::size_t before = 1, after = 1;
  for (std::size_t k = 0; k < pos; ++k) before *= static_cast<std::size_t>(dims[k]);
  for (std::size_t k = pos + 1; k < dims.size(); ++k) after *= static_cast<std::size_t>(dims[k]);
  return kron(kron(Mat::Identity(before, before), op), Mat::Identity(after, after));
}

cplx pw(cplx x, int e) { return std::pow(x, e); }

// p(u v) for integer-exponent Laurent polynomials.
LaurentPoly scale_arg(const LaurentPoly& p, cplx v) {
  if (!p.only_even()) throw DimensionMismatch("scale_arg: half-integer exponents");
  LaurentPoly out;
  for (int n2 = p.lo(); n2 <= p.hi(); ++n2) {
    const cplx c = p.coeff(n2);
    if (c != 0.0) out += LaurentPoly::monomial(c * pw(v, n2 / 2), n2);
  }
  return out;
}

Mat trace_aux(const Mat& m, std::size_t d) { return partial_trace_last(m, d); }

}  // namespace

Chain::Chain(ChainConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  for (auto it = cfg_.two_js.rbegin(); it != cfg_.two_js.rend(); ++it) qd_.push_back(*it + 1);
  dq_ = cfg_.dim();
}

const Chain::AuxOps& Chain::ops(int two_j) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ops_.find(two_j);
  if (it != ops_.end()) return *it->second;
  const cplx q = cfg_.q;
  auto o = std::make_shared<AuxOps>();
  for (int tjn : cfg_.two_js) {
    o->r.push_back(r_fused(tjn, two_j, q));
    o->lax.push_back(lax(tjn, two_j, q));
    o->rt.push_back(r_normalized(tjn, two_j, q));
  }
  o->k = k_fused(two_j, cfg_.boundary.left, q);
  o->kt = k_normalized(two_j, cfg_.boundary.left, q);
  o->ktp = k_dual_normalized(two_j, cfg_.boundary.right, q);
  o->kp = k_dual(two_j, cfg_.boundary.right, q);
  return *ops_.emplace(two_j, std::move(o)).first->second;
}

Mat Chain::dressed_in(int two_j, cplx u, const std::vector<int>& aux_dims, std::size_t aux_index,
                      bool lax_ops) const {
  const std::size_t N = cfg_.N();
  std::vector<int> dims = qd_;
  dims.insert(dims.end(), aux_dims.begin(), aux_dims.end());
  if (aux_index >= aux_dims.size() || aux_dims[aux_index] != two_j + 1)
    throw DimensionMismatch("dressed: aux slot does not match spin");
  std::size_t D = dq_;
  for (int a : aux_dims) D *= static_cast<std::size_t>(a);
  const std::size_t aux = N + aux_index;
  const AuxOps& o = ops(two_j);
  auto site_op = [&](std::size_t n, cplx x) -> Mat {
    const Mat op = lax_ops ? o.lax[n - 1].eval(x) : o.r[n - 1].eval(x);
    return embed_pair(op, dims, N - n, aux);
  };
  Mat T = Mat::Identity(D, D), Th = Mat::Identity(D, D);
  for (std::size_t n = N; n >= 1; --n) T = T * site_op(n, u * cfg_.inhoms[n - 1]);
  for (std::size_t n = 1; n <= N; ++n) Th = Th * site_op(n, u / cfg_.inhoms[n - 1]);
  const Mat K = embed_one(o.k.eval(u), dims, aux);
  return T * K * Th;
}

Mat Chain::dressed(int two_j, cplx u, bool lax_ops) const {
  return dressed_in(two_j, u, {two_j + 1}, 0, lax_ops);
}

Mat Chain::transfer(int two_j, cplx u) const {
  if (two_j == 0) return Mat::Identity(dq_, dq_);
  const std::size_t da = static_cast<std::size_t>(two_j) + 1;
  const Mat Kp = ops(two_j).kp.eval(u);
  const Mat M = kron(Mat::Identity(dq_, dq_), Kp) * dressed(two_j, u, false);
  return trace_aux(M, da);
}

Mat Chain::transfer_tilde(int two_j, cplx u) const {
  const std::size_t N = cfg_.N();
  const std::size_t da = static_cast<std::size_t>(two_j) + 1, D = dq_ * da;
  std::vector<int> dims = qd_;
  dims.push_back(two_j + 1);
  const AuxOps& o = ops(two_j);
  auto site_op = [&](std::size_t n, cplx x) { return embed_pair(o.rt[n - 1].eval(x), dims, N - n, N); };
  Mat T = Mat::Identity(D, D), Th = Mat::Identity(D, D);
  for (std::size_t n = N; n >= 1; --n) T = T * site_op(n, u * cfg_.inhoms[n - 1]);
  for (std::size_t n = 1; n <= N; ++n) Th = Th * site_op(n, u / cfg_.inhoms[n - 1]);
  const Mat I = Mat::Identity(dq_, dq_);
  return trace_aux(kron(I, o.ktp.eval(u)) * T * kron(I, o.kt.eval(u)) * Th, da);
}

cplx Chain::renorm_g(int two_j, cplx u) const {
  const cplx q = cfg_.q;
  cplx g = f_j(two_j, q).eval(u);
  for (int l = 0; l < two_j - 1; ++l) g /= cfun(qpow(q, -1.0 - l) / (u * u)) * cfun(u * u * qpow(q, 1.0 - l));
  const double j = 0.5 * two_j;
  for (std::size_t n = 0; n < cfg_.N(); ++n) {
    const double jn = 0.5 * cfg_.two_js[n];
    const cplx v = cfg_.inhoms[n];
    for (int k = 0; k < cfg_.two_js[n]; ++k)
      for (int l = 0; l < two_j; ++l) {
        const cplx a = u * qpow(q, jn + j - k - l);
        g /= cfun(a * v) * cfun(a / v);
      }
  }
  return g;
}

RationalMatrix Chain::transfer_tilde_poly(int two_j) const {
  const std::size_t N = cfg_.N();
  const std::size_t da = static_cast<std::size_t>(two_j) + 1, D = dq_ * da;
  std::vector<int> dims = qd_;
  dims.push_back(two_j + 1);

  const AuxOps& o = ops(two_j);
  const KMatrix& Kt = o.kt;
  const KMatrix& Ktp = o.ktp;
  int lo = Kt.poly.min_exponent() + Ktp.poly.min_exponent();
  int hi = Kt.poly.max_exponent() + Ktp.poly.max_exponent();
  LaurentPoly den(1.0);
  for (std::size_t n = 1; n <= N; ++n) {
    const NormalizedRMatrix& Rn = o.rt[n - 1];
    lo += 2 * Rn.M.min_exponent();
    hi += 2 * Rn.M.max_exponent();
    const cplx v = cfg_.inhoms[n - 1];
    den = den * scale_arg(Rn.den, v) * scale_arg(Rn.den, 1.0 / v);
  }
  if (lo % 2 != 0 || hi % 2 != 0) throw FactorizationFailure("transfer_tilde_poly: half-integer exponents");

  auto numerator = [&](cplx u) -> Mat {
    Mat T = Mat::Identity(D, D), Th = Mat::Identity(D, D);
    for (std::size_t n = N; n >= 1; --n)
      T = T * embed_pair(o.rt[n - 1].M.eval(u * cfg_.inhoms[n - 1]), dims, N - n, N);
    for (std::size_t n = 1; n <= N; ++n)
      Th = Th * embed_pair(o.rt[n - 1].M.eval(u / cfg_.inhoms[n - 1]), dims, N - n, N);
    const Mat I = Mat::Identity(dq_, dq_);
    return trace_aux(kron(I, Ktp.eval(u)) * T * kron(I, Kt.eval(u)) * Th, da);
  };

  const int elo = lo / 2, ehi = hi / 2;
  const int npts = ehi - elo + 1;
  std::vector<Mat> samples;
  std::vector<cplx> nodes;
  for (int k = 0; k < npts; ++k) {
    nodes.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / npts));
    samples.push_back(numerator(nodes.back()));
  }
  PolyMatrix num(dq_, dq_);
  for (std::size_t r = 0; r < dq_; ++r)
    for (std::size_t c = 0; c < dq_; ++c) {
      std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1), 0.0);
      for (int e = elo; e <= ehi; ++e) {
        cplx acc = 0.0;
        for (int k = 0; k < npts; ++k) acc += samples[k](r, c) * pw(nodes[k], -e);
        coeffs[static_cast<std::size_t>(2 * (e - elo))] = acc / static_cast<double>(npts);
      }
      num(r, c) = LaurentPoly(lo, std::move(coeffs));
    }
  num.normalize();
  RationalMatrix out{num, den};
  const cplx probe = std::polar(1.3, 0.7);
  const double res = rel_residual(out.eval(probe), transfer_tilde(two_j, probe));
  if (res > 1e-8) throw FactorizationFailure("transfer_tilde_poly: interpolation check failed");
  return out;
}

Mat Chain::gamma_image(cplx u) const {
  const cplx q = cfg_.q;
  const Mat I = Mat::Identity(dq_, dq_);
  const Mat Pm = kron(I, 0.5 * (Mat::Identity(4, 4) - swap_matrix(2, 2)));
  const Mat Rq = kron(I, r_fundamental(q).eval(q * u * u));
  const Mat M = Pm * dressed_in(1, u, {2, 2}, 0, true) * Rq * dressed_in(1, u * q, {2, 2}, 1, true);
  return trace_aux(M, 4);
}

cplx Chain::gamma_expected(cplx u) const {
  const cplx q = cfg_.q;
  cplx pred = gamma_minus(cfg_.boundary.left, q).eval(u);
  for (std::size_t n = 0; n < cfg_.N(); ++n) {
    const double jn = 0.5 * cfg_.two_js[n];
    for (cplx x : {cfg_.inhoms[n], 1.0 / cfg_.inhoms[n]})
      pred *= cfun(u * qpow(q, jn + 1.5) * x) * cfun(u * qpow(q, -jn + 0.5) * x);
  }
  return pred;
}

LaurentPoly quantum_det_image(const ChainConfig& cfg, cplx sample, double tol) {
  const Chain ch(cfg);
  const cplx q = cfg.q;
  LaurentPoly pred = gamma_minus(cfg.boundary.left, q);
  for (std::size_t n = 0; n < cfg.N(); ++n) {
    const double jn = 0.5 * cfg.two_js[n];
    for (cplx x : {cfg.inhoms[n], 1.0 / cfg.inhoms[n]})
      pred = pred * LaurentPoly::c_of(qpow(q, jn + 1.5) * x) * LaurentPoly::c_of(qpow(q, -jn + 0.5) * x);
  }
  const Mat img = ch.gamma_image(sample);
  const cplx p = pred.eval(sample);
  const double res = (img - p * Mat::Identity(ch.dim(), ch.dim())).norm() / std::abs(p);
  if (!(res <= tol)) throw FactorizationFailure("quantum determinant image is not the predicted scalar");
  return pred;
}

double dressed_reflection_residual(const Chain& ch, int two_j1, int two_j2, cplx u, cplx v) {
  const cplx q = ch.config().q;
  const std::size_t N = ch.config().N();
  std::vector<int> aux{two_j1 + 1, two_j2 + 1};
  std::vector<int> dims;
  for (auto it = ch.config().two_js.rbegin(); it != ch.config().two_js.rend(); ++it) dims.push_back(*it + 1);
  dims.insert(dims.end(), aux.begin(), aux.end());
  const RMatrix R = r_fused(two_j1, two_j2, q);
  const Mat Rm = embed_pair(R.eval(u / v), dims, N, N + 1);
  const Mat Rp = embed_pair(R.eval(u * v), dims, N, N + 1);
  const Mat K1 = ch.dressed_in(two_j1, u, aux, 0, true);
  const Mat K2 = ch.dressed_in(two_j2, v, aux, 1, true);
  return rel_residual(Rm * K1 * Rp * K2, K2 * Rp * K1 * Rm);
}

cplx tt_coefficient(const ChainConfig& cfg, int two_j, cplx u) {
  const cplx q = cfg.q;
  const double j = 0.5 * two_j;
  const cplx a = u * qpow(q, j - 0.5);
  cplx coef = 1.0;
  for (std::size_t n = 0; n < cfg.N(); ++n) {
    const LaurentPoly b = beta_half(cfg.two_js[n], q);
    coef *= b.eval(a * cfg.inhoms[n]) * b.eval(a / cfg.inhoms[n]);
  }
  const cplx w = u * qpow(q, j - 1.5);
  coef *= gamma_minus(cfg.boundary.left, q).eval(w) * gamma_plus(cfg.boundary.right, q).eval(w);
  coef /= cfun(u * u * qpow(q, 2 * j)) * cfun(u * u * qpow(q, 2 * j - 2));
  return coef;
}

double tt_residual(const Chain& ch, int two_j, cplx u) {
  const cplx q = ch.config().q;
  const double j = 0.5 * two_j;
  const Mat lhs = ch.transfer(two_j, u);
  Mat rhs = ch.transfer(two_j - 1, u * qpow(q, -0.5)) * ch.transfer(1, u * qpow(q, j - 0.5));
  if (two_j >= 2) rhs += tt_coefficient(ch.config(), two_j, u) * ch.transfer(two_j - 2, u / q);
  return rel_residual(lhs, rhs);
}

namespace {

cplx phi(const ChainConfig& cfg, cplx w) {
  const cplx q = cfg.q;
  cplx r = gamma_minus(cfg.boundary.left, q).eval(w) * gamma_plus(cfg.boundary.right, q).eval(w);
  for (std::size_t n = 0; n < cfg.N(); ++n) {
    const LaurentPoly b = beta_half(cfg.two_js[n], q);
    r *= b.eval(w * q * cfg.inhoms[n]) * b.eval(w * q / cfg.inhoms[n]);
  }
  return r;
}

Mat transfer_or_zero(const Chain& ch, int two_j, cplx u) {
  if (two_j < 0) return Mat::Zero(ch.dim(), ch.dim());
  return ch.transfer(two_j, u);
}

}  // namespace

cplx tsys_g(const ChainConfig& cfg, int two_j, cplx u) {
  const cplx q = cfg.q;
  const double j = 0.5 * two_j;
  cplx r = (two_j % 2 == 0) ? 1.0 : -1.0;
  for (int l = 0; l < two_j; ++l)
    r *= phi(cfg, u * qpow(q, j - 1 - l)) /
         (cfun(u * u * qpow(q, 2 * j + 1 - 2 * l)) * cfun(u * u * qpow(q, 2 * j - 1 - 2 * l)));
  return r;
}

double tsystem_residual(const Chain& ch, int two_j, cplx u) {
  const cplx q = ch.config().q;
  const cplx sq = qpow(q, 0.5);
  const Mat lhs = ch.transfer(two_j, u / sq) * ch.transfer(two_j, u * sq);
  const Mat rhs = transfer_or_zero(ch, two_j + 1, u) * transfer_or_zero(ch, two_j - 1, u) +
                  tsys_g(ch.config(), two_j, u) * Mat::Identity(ch.dim(), ch.dim());
  return rel_residual(lhs, rhs);
}

double ysystem_residual(const Chain& ch, int two_j, cplx u) {
  const cplx q = ch.config().q;
  const cplx sq = qpow(q, 0.5);
  const Mat I = Mat::Identity(ch.dim(), ch.dim());
  auto Y = [&](int tj, cplx x) -> Mat {
    return transfer_or_zero(ch, tj + 1, x) * transfer_or_zero(ch, tj - 1, x) / tsys_g(ch.config(), tj, x);
  };
  const Mat lhs = Y(two_j, u / sq) * Y(two_j, u * sq);
  const Mat rhs = (Y(two_j + 1, u) + I) * (Y(two_j - 1, u) + I);
  return rel_residual(lhs, rhs);
}

double commutator_residual(const Mat& a, const Mat& b) {
  const double scale = a.norm() * b.norm();
  if (scale == 0.0) return 0.0;
  return (a * b - b * a).norm() / scale;
}

}  // namespace qtt
