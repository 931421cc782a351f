#include "qtt/kmatrix.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "qtt/intertwiners.hpp"
#include "qtt/repspace.hpp"
#include "qtt/rmatrix.hpp"

namespace qtt {

namespace {

LaurentPoly c_u2(cplx q, double a) { return LaurentPoly::c_of(qpow(q, a), 4); }

// R(u^2 q^{s2/2})
PolyMatrix r_at_u2(const PolyMatrix& r, int s2, cplx q) { return r.shift_q(s2, q).subst_power(2); }
// R(u^{-2} q^{s2/2})
PolyMatrix r_at_inv_u2(const PolyMatrix& r, int s2, cplx q) { return r.subst_inv_shift(s2, q).subst_power(2); }

PolyMatrix k_fused_poly(int two_j, const KParams& p, cplx q);

PolyMatrix k_half_poly(const KParams& p, cplx q) {
  const cplx qq = q - 1.0 / q;
  PolyMatrix k(2, 2);
  k(0, 0) = LaurentPoly::monomial(p.eps_plus, 2) + LaurentPoly::monomial(p.eps_minus, -2);
  k(1, 1) = LaurentPoly::monomial(p.eps_minus, 2) + LaurentPoly::monomial(p.eps_plus, -2);
  const LaurentPoly s = LaurentPoly::monomial(1.0 / qq, 4) - LaurentPoly::monomial(1.0 / qq, -4);
  k(0, 1) = s * p.k_plus;
  k(1, 0) = s * p.k_minus;
  return k;
}

PolyMatrix build_k_fused(int two_j, const KParams& p, cplx q) {
  if (two_j == 1) return k_half_poly(p, q);
  const SpinMaps m = spin_maps(two_j, q);
  const PolyMatrix k1 = kron(k_half_poly(p, q).shift_q(1 - two_j, q), PolyMatrix::identity(static_cast<std::size_t>(two_j)));
  const PolyMatrix r = r_at_u2(r_half_j(two_j - 1, q).poly, 2 - two_j, q);
  const PolyMatrix k2 = kron(PolyMatrix::identity(2), k_fused_poly(two_j - 1, p, q).shift_q(1, q));
  return PolyMatrix::constant(m.F) * k1 * r * k2 * PolyMatrix::constant(m.E);
}

PolyMatrix k_fused_poly(int two_j, const KParams& p, cplx q) {
  if (two_j < 0) throw std::invalid_argument("k_fused: negative spin");
  if (two_j == 0) return PolyMatrix::identity(1);
  static std::shared_mutex mu;
  static std::map<std::vector<double>, PolyMatrix> cache;
  std::vector<double> key = p.digest();
  key.insert(key.begin(), {static_cast<double>(two_j), q.real(), q.imag()});
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  PolyMatrix k = build_k_fused(two_j, p, q);
  std::unique_lock lock(mu);
  return cache.emplace(key, std::move(k)).first->second;
}

// Numerator of K^{+(j)}: K^{(j)}(1/(uq))^t with the dual substitution.
PolyMatrix k_dual_num(int two_j, const KParams& bar, cplx q) {
  return k_fused_poly(two_j, bar.dual_swap(), q).subst_inv_shift(-2, q).transpose();
}

PolyMatrix o_matrix(const Mat& up, const Mat& zero, const Mat& down) {
  PolyMatrix o(static_cast<std::size_t>(up.rows()), static_cast<std::size_t>(up.cols()));
  for (Eigen::Index i = 0; i < up.rows(); ++i)
    for (Eigen::Index k = 0; k < up.cols(); ++k)
      o(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
          LaurentPoly::monomial(up(i, k), 2) + LaurentPoly(zero(i, k)) + LaurentPoly::monomial(down(i, k), -2);
  return o;
}

}  // namespace

std::vector<double> KParams::digest() const {
  return {eps_plus.real(), eps_plus.imag(), eps_minus.real(), eps_minus.imag(),
          k_plus.real(),   k_plus.imag(),   k_minus.real(),   k_minus.imag()};
}

KMatrix k_fundamental(const KParams& p, cplx q) { return {1, k_half_poly(p, q)}; }

KMatrix k_fused(int two_j, const KParams& p, cplx q) { return {two_j, k_fused_poly(two_j, p, q)}; }

LaurentPoly f_j(int two_j, cplx q) {
  LaurentPoly f(1.0);
  for (int k = 1; k <= two_j - 1; ++k)
    for (int l = 1; l <= k; ++l) f = f * c_u2(q, k + l + 2 - two_j) * LaurentPoly::c_of(qpow(q, -k - l + two_j), -4);
  return f;
}

Mat k_dual_recursive(int two_j, const KParams& bar, cplx u, cplx q) {
  if (two_j == 0) return Mat::Identity(1, 1);
  const PolyMatrix half = k_dual_num(1, bar, q);
  if (two_j == 1) return half.eval(u);
  const SpinMaps m = spin_maps(two_j, q);
  const cplx sq = qpow(q, 0.5);
  const double j = 0.5 * two_j;
  const Mat k2 = kron(Mat::Identity(2, 2), k_dual_recursive(two_j - 1, bar, u / sq, q));
  const Mat r = r_half_j(two_j - 1, q).eval(qpow(q, -j - 1.0) / (u * u));
  const Mat k1 = kron(half.eval(u * qpow(q, j - 0.5)), Mat::Identity(two_j, two_j));
  const cplx pre = f_j(two_j - 1, q).eval(u / sq) / f_j(two_j, q).eval(u);
  return pre * m.E.transpose() * k2 * r * k1 * m.F.transpose();
}

DualKMatrix k_dual(int two_j, const KParams& bar, cplx q) {
  DualKMatrix d{two_j, {k_dual_num(two_j, bar, q), f_j(two_j, q)}};
  if (two_j >= 2) {
    const cplx u(1.17, 0.31);
    const double res = rel_residual(d.eval(u), k_dual_recursive(two_j, bar, u, q));
    if (res > 1e-9) throw FusionMismatch("k_dual: closed form and recursion differ by " + std::to_string(res));
  }
  return d;
}

LaurentPoly k_tilde_divisor(int two_j, cplx q) {
  LaurentPoly d(1.0);
  for (int l = 0; l <= two_j - 2; ++l) d = d * c_u2(q, 1 - l);
  return d;
}

KMatrix k_normalized(int two_j, const KParams& p, cplx q, double* remainder) {
  double rem = 0.0;
  KMatrix k{two_j, k_fused_poly(two_j, p, q).exact_div(k_tilde_divisor(two_j, q), 1e-10, &rem)};
  if (remainder) *remainder = rem;
  return k;
}

KMatrix k_dual_normalized(int two_j, const KParams& bar, cplx q) {
  KMatrix k = k_normalized(two_j, bar.dual_swap(), q);
  k.poly = k.poly.subst_inv_shift(-2, q).transpose();
  return k;
}

LaurentPoly gamma_minus(const KParams& p, cplx q) {
  const cplx qq = q - 1.0 / q, q2 = q * q;
  const LaurentPoly c2 = c_u2(q, 2.0);
  LaurentPoly inner = LaurentPoly(p.eps_plus * p.eps_plus + p.eps_minus * p.eps_minus) +
                      LaurentPoly::monomial(p.eps_plus * p.eps_minus * q2, 4) +
                      LaurentPoly::monomial(p.eps_plus * p.eps_minus / q2, -4) -
                      c2 * c2 * (p.k_plus * p.k_minus / (qq * qq));
  return c_u2(q, 0.0) * inner;
}

LaurentPoly gamma_plus(const KParams& bar, cplx q) {
  return gamma_minus(bar.dual_swap(), q).subst_inv_shift(-4, q);
}

GammaScalars gamma_scalars(const BoundaryParams& b, cplx q) {
  return {gamma_minus(b.left, q), gamma_plus(b.right, q)};
}

namespace {
LaurentPoly trace_pminus(const PolyMatrix& m, cplx q) {
  const Mat P = r_fundamental(q).eval(1.0) / (q - 1.0 / q);
  const Mat Pm = 0.5 * (Mat::Identity(4, 4) - P);
  const PolyMatrix x = PolyMatrix::constant(Pm) * m;
  LaurentPoly t;
  for (std::size_t i = 0; i < 4; ++i) t += x(i, i);
  return t;
}

double poly_rel(const LaurentPoly& a, const LaurentPoly& b) {
  const double s = std::max(a.max_abs(), b.max_abs());
  return s == 0.0 ? 0.0 : (a - b).max_abs() / s;
}
}  // namespace

double gamma_minus_trace_residual(const KParams& p, cplx q) {
  const PolyMatrix k = k_half_poly(p, q);
  const PolyMatrix m = kron(k, PolyMatrix::identity(2)) * r_at_u2(r_fundamental(q).poly, 2, q) *
                       kron(PolyMatrix::identity(2), k.shift_q(2, q));
  return poly_rel(trace_pminus(m, q), gamma_minus(p, q));
}

double gamma_plus_trace_residual(const KParams& bar, cplx q) {
  const PolyMatrix kp = k_dual_num(1, bar, q);
  const PolyMatrix m = kron(kp.shift_q(2, q), PolyMatrix::identity(2)) *
                       r_at_inv_u2(r_fundamental(q).poly, -6, q) * kron(PolyMatrix::identity(2), kp);
  return poly_rel(trace_pminus(m, q), gamma_plus(bar, q));
}

double reflection_residual(int two_j1, int two_j2, const KParams& p, cplx u, cplx v, cplx q) {
  const auto d1 = two_j1 + 1, d2 = two_j2 + 1;
  const RMatrix r = r_fused(two_j1, two_j2, q);
  const Mat k1 = kron(k_fused(two_j1, p, q).eval(u), Mat::Identity(d2, d2));
  const Mat k2 = kron(Mat::Identity(d1, d1), k_fused(two_j2, p, q).eval(v));
  const Mat a = r.eval(u / v), b = r.eval(u * v);
  return rel_residual(a * k1 * b * k2, k2 * b * k1 * a);
}

double dual_reflection_residual(int two_j1, int two_j2, const KParams& bar, cplx u, cplx v, cplx q) {
  const auto d1 = two_j1 + 1, d2 = two_j2 + 1;
  const RMatrix r = r_fused(two_j1, two_j2, q);
  const Mat k1 = kron(k_dual(two_j1, bar, q).eval(u), Mat::Identity(d2, d2));
  const Mat k2 = kron(Mat::Identity(d1, d1), k_dual(two_j2, bar, q).eval(v));
  const Mat a = r.eval(v / u), b = r.eval(1.0 / (u * v * q * q));
  return rel_residual(a * k1 * b * k2, k2 * b * k1 * a);
}

double transpose_symmetry_residual(int two_j, const KParams& p, cplx q) {
  const KParams swapped{p.eps_plus, p.eps_minus, p.k_minus, p.k_plus};
  return residual(k_fused_poly(two_j, swapped, q).transpose(), k_fused_poly(two_j, p, q));
}

std::vector<NamedResidual> intertwining_check(int two_j, const KParams& p, cplx q, double eps_shift) {
  const SpinRep s = spin_rep(two_j, q);
  const cplx sq = qpow(q, 0.5);
  const cplx ep = p.eps_plus * (1.0 + eps_shift), em = p.eps_minus;
  const Mat a_up = p.k_plus * sq * s.splus * s.qpow_s3(0.5);
  const Mat a_dn = p.k_minus / sq * s.sminus * s.qpow_s3(0.5);
  const Mat b_up = p.k_minus * sq * s.sminus * s.qpow_s3(-0.5);
  const Mat b_dn = p.k_plus / sq * s.splus * s.qpow_s3(-0.5);
  const PolyMatrix k = k_fused_poly(two_j, p, q);
  // O(u) and O(1/u) for each relation
  const PolyMatrix o1 = o_matrix(a_up, ep * s.qpow_s3(1.0), a_dn);
  const PolyMatrix o1i = o_matrix(a_dn, ep * s.qpow_s3(1.0), a_up);
  const PolyMatrix o2 = o_matrix(b_up, em * s.qpow_s3(-1.0), b_dn);
  const PolyMatrix o2i = o_matrix(b_dn, em * s.qpow_s3(-1.0), b_up);
  return {{"int1", residual(k * o1, o1i * k)}, {"int2", residual(k * o2, o2i * k)}};
}

double reduction_residual(int two_j, const KParams& p, cplx q) {
  if (two_j < 2) throw std::invalid_argument("reduction_residual: need j >= 1");
  const BarMaps b = bar_maps(two_j - 1, q);
  const auto d = static_cast<std::size_t>(two_j + 1);
  const PolyMatrix k2 = kron(PolyMatrix::identity(2), k_fused_poly(two_j, p, q).shift_q(-1, q));
  const PolyMatrix r = r_at_u2(r_half_j(two_j, q).poly, -two_j - 3, q);
  const PolyMatrix k1 = kron(k_half_poly(p, q).shift_q(-two_j - 2, q), PolyMatrix::identity(d));
  const PolyMatrix lhs = PolyMatrix::constant(b.Fbar) * k2 * r * k1 * PolyMatrix::constant(b.Ebar);
  LaurentPoly pre(1.0);
  for (int k = 0; k <= two_j - 2; ++k) pre = pre * c_u2(q, -two_j + 2 + k) * c_u2(q, -two_j + k);
  const PolyMatrix rhs = k_fused_poly(two_j - 1, p, q) * (pre * gamma_minus(p, q).shift_q(-two_j - 2, q));
  return residual(lhs, rhs);
}

double dual_reduction_residual(int two_j, const KParams& bar, cplx q) {
  if (two_j < 2) throw std::invalid_argument("dual_reduction_residual: need j >= 1");
  const BarMaps b = bar_maps(two_j - 1, q);
  const auto d = static_cast<std::size_t>(two_j + 1);
  // Numerators only: f^{(1/2)} = 1 and the f^{(j)}, f^{(j-1/2)} factors cancel across the identity.
  const PolyMatrix k1 = kron(k_dual_num(1, bar, q).shift_q(two_j, q), PolyMatrix::identity(d));
  const PolyMatrix r = r_at_inv_u2(r_half_j(two_j, q).poly, -two_j - 3, q);
  const PolyMatrix k2 = kron(PolyMatrix::identity(2), k_dual_num(two_j, bar, q).shift_q(-1, q));
  const PolyMatrix lhs = PolyMatrix::constant(b.Ebar.transpose()) * k1 * r * k2 * PolyMatrix::constant(b.Fbar.transpose());
  LaurentPoly pre(1.0);
  for (int k = 0; k <= two_j - 2; ++k) pre = pre * c_u2(q, two_j - k) * c_u2(q, two_j - 2 - k);
  const PolyMatrix rhs =
      k_dual_num(two_j - 1, bar, q).shift_q(-2, q) * (pre * gamma_plus(bar, q).shift_q(two_j - 2, q));
  return residual(lhs, rhs);
}

Mat k_spin1_printed(const KParams& p, cplx u, cplx q) {
  const cplx qq = q - 1.0 / q, ep = p.eps_plus, em = p.eps_minus, kp = p.k_plus, km = p.k_minus;
  const cplx u2 = u * u, sk = std::sqrt(q + 1.0 / q), sq = std::sqrt(q);
  auto x1 = [&](cplx a, cplx b) { return qq * (a * a * u2 + b * b / u2 + a * b * (q + 1.0 / q)) + kp * km * cfun(u2 / q); };
  const cplx x2 = qq * (ep * ep + em * em + ep * em * (u2 / q + q / u2)) +
                  kp * km * (u2 * u2 + 1.0 / (u2 * u2) - q * q - 1.0 / (q * q)) / qq;
  auto y = [&](cplx k, cplx a, cplx b) { return k * cfun(u2) * sk * (u / sq * a + sq / u * b); };
  auto z = [&](cplx k) { return k * k * cfun(u2) * cfun(u2 / q) / qq; };
  Mat m(3, 3);
  m << x1(ep, em), y(kp, ep, em), z(kp), y(km, ep, em), x2, y(kp, em, ep), z(km), y(km, em, ep), x1(em, ep);
  return cfun(u2 * q) / qq * m;
}

}  // namespace qtt
