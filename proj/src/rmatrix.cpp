#include "qtt/rmatrix.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "qtt/intertwiners.hpp"
#include "qtt/repspace.hpp"

namespace qtt {

namespace {

using Key = std::tuple<int, int, double, double>;

template <class V>
class Cache {
 public:
  template <class Build>
  V get(const Key& k, Build build) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(k);
      if (it != map_.end()) return it->second;
    }
    V v = build();
    std::unique_lock lock(mu_);
    return map_.emplace(k, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, V> map_;
};

Key key(int a, int b, cplx q) { return {a, b, q.real(), q.imag()}; }

LaurentPoly c_shift(cplx q, double a) { return LaurentPoly::c_of(qpow(q, a), 2); }

}  // namespace

PolyMatrix r_half_closed(int two_j, cplx q) {
  if (two_j < 0) throw std::invalid_argument("r_half_closed: negative spin");
  if (two_j == 0) return PolyMatrix::identity(2);
  const SpinRep s = spin_rep(two_j, q);
  const int d = s.dim();
  const double j = 0.5 * two_j;
  PolyMatrix m(static_cast<std::size_t>(2 * d), static_cast<std::size_t>(2 * d));
  const cplx qq = q - 1.0 / q;
  for (int a = 0; a < 2; ++a)
    for (int n = 0; n < d; ++n) {
      const int r = a * d + n;
      const double ed = 0.5 * (1.0 + (a == 0 ? 1.0 : -1.0) * s.s3[static_cast<std::size_t>(n)]);
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = LaurentPoly::c_of(qpow(q, ed), 2);
    }
  // sigma+ (x) S- and sigma- (x) S+
  for (int n = 0; n < d; ++n)
    for (int k = 0; k < d; ++k) {
      if (s.sminus(n, k) != 0.0)
        m(static_cast<std::size_t>(n), static_cast<std::size_t>(d + k)) = LaurentPoly(qq * s.sminus(n, k));
      if (s.splus(n, k) != 0.0)
        m(static_cast<std::size_t>(d + n), static_cast<std::size_t>(k)) = LaurentPoly(qq * s.splus(n, k));
    }
  LaurentPoly pre(1.0);
  for (int k = 0; k <= two_j - 2; ++k) pre = pre * c_shift(q, j - 0.5 - k);
  m *= pre;
  return m;
}

PolyMatrix r_half_recursive(int two_j, cplx q) {
  if (two_j <= 1) return r_half_closed(two_j, q);
  const SpinMaps maps = spin_maps(two_j, q);
  const std::vector<int> dims{2, 2, two_j};
  const PolyMatrix r13 = embed_pair(r_half_closed(two_j - 1, q).shift_q(-1, q), dims, 0, 2);
  const PolyMatrix r12 = embed_pair(r_half_closed(1, q).shift_q(two_j - 1, q), dims, 0, 1);
  const Mat I2 = Mat::Identity(2, 2);
  const PolyMatrix left = PolyMatrix::constant(kron(I2, maps.F));
  const PolyMatrix right = PolyMatrix::constant(kron(I2, maps.E));
  return left * r13 * r12 * right;
}

RMatrix r_fundamental(cplx q) { return r_half_j(1, q); }

RMatrix r_half_j(int two_j, cplx q) {
  static Cache<RMatrix> cache;
  return cache.get(key(1, two_j, q), [&] {
    RMatrix r{1, two_j, r_half_closed(two_j, q)};
    if (two_j >= 2) {
      const double res = residual(r.poly, r_half_recursive(two_j, q));
      if (res > 1e-10)
        throw FusionMismatch("r_half_j: closed form and recursion differ by " + std::to_string(res));
    }
    return r;
  });
}

RMatrix r_fused(int two_j1, int two_j2, cplx q) {
  if (two_j1 < 0 || two_j2 < 0) throw std::invalid_argument("r_fused: negative spin");
  if (two_j1 == 0 || two_j2 == 0) {
    const auto n = static_cast<std::size_t>((two_j1 + 1) * (two_j2 + 1));
    return {two_j1, two_j2, PolyMatrix::identity(n)};
  }
  if (two_j1 == 1) return r_half_j(two_j2, q);
  static Cache<RMatrix> cache;
  return cache.get(key(two_j1, two_j2, q), [&] {
    const SpinMaps maps = spin_maps(two_j1, q);
    const std::vector<int> dims{2, two_j1, two_j2 + 1};
    const PolyMatrix a = embed_pair(r_half_j(two_j2, q).poly.shift_q(1 - two_j1, q), dims, 0, 2);
    const PolyMatrix b = embed_pair(r_fused(two_j1 - 1, two_j2, q).poly.shift_q(1, q), dims, 1, 2);
    const Mat I3 = Mat::Identity(two_j2 + 1, two_j2 + 1);
    const PolyMatrix left = PolyMatrix::constant(kron(maps.F, I3));
    const PolyMatrix right = PolyMatrix::constant(kron(maps.E, I3));
    return RMatrix{two_j1, two_j2, left * a * b * right};
  });
}

LaurentPoly r_tilde_divisor(int two_j1, int two_j2, cplx q) {
  const double s = 0.5 * (two_j1 + two_j2);
  LaurentPoly d(1.0);
  for (int k = 0; k < two_j1; ++k)
    for (int l = 0; l < two_j2; ++l) d = d * c_shift(q, s - k - l);
  return d;
}

NormalizedRMatrix r_normalized(int two_j1, int two_j2, cplx q) {
  const double s = 0.5 * (two_j1 + two_j2);
  NormalizedRMatrix n;
  n.two_j1 = two_j1;
  n.two_j2 = two_j2;
  LaurentPoly divisor(1.0), den(1.0);
  for (int k = 0; k < two_j1; ++k) {
    den = den * c_shift(q, s - k);
    for (int l = 1; l < two_j2; ++l) divisor = divisor * c_shift(q, s - k - l);
  }
  n.M = r_fused(two_j1, two_j2, q).poly.exact_div(divisor, 1e-10, &n.remainder);
  n.den = two_j2 == 0 ? LaurentPoly(1.0) : den;
  return n;
}

LaxMatrix lax(int two_jn, int two_j, cplx q) {
  LaxMatrix l;
  l.two_jn = two_jn;
  l.two_j = two_j;
  LaurentPoly d(1.0);
  const double s = 0.5 * (two_j + two_jn);
  for (int k = 0; k <= two_jn - 2; ++k)
    for (int m = 0; m < two_j; ++m) d = d * c_shift(q, s - k - m - 1);
  l.divisor = d;
  l.poly = r_fused(two_jn, two_j, q).poly.exact_div(d, 1e-10, &l.remainder);
  return l;
}

PolyMatrix lax_direct_half(int two_jn, cplx q) {
  const SpinRep s = spin_rep(two_jn, q);
  const auto d = static_cast<std::size_t>(s.dim());
  PolyMatrix l(2 * d, 2 * d);
  const cplx qq = q - 1.0 / q, sq = qpow(q, 0.5);
  for (std::size_t n = 0; n < d; ++n) {
    const double s3 = s.s3[n];
    const cplx kp = qpow(q, 0.5 * s3), km = qpow(q, -0.5 * s3);
    // aux up: u q^{1/2} K^{1/2} - u^{-1} q^{-1/2} K^{-1/2}; aux down: K^{1/2} <-> K^{-1/2}
    l(2 * n, 2 * n) = LaurentPoly::monomial(sq * kp, 2) - LaurentPoly::monomial(km / sq, -2);
    l(2 * n + 1, 2 * n + 1) = LaurentPoly::monomial(sq * km, 2) - LaurentPoly::monomial(kp / sq, -2);
    for (std::size_t k = 0; k < d; ++k) {
      const auto i = static_cast<Eigen::Index>(n), c = static_cast<Eigen::Index>(k);
      if (s.sminus(i, c) != 0.0) l(2 * n, 2 * k + 1) = LaurentPoly(qq * s.sminus(i, c));
      if (s.splus(i, c) != 0.0) l(2 * n + 1, 2 * k) = LaurentPoly(qq * s.splus(i, c));
    }
  }
  return l;
}

LaurentPoly beta_half(int two_j, cplx q) {
  const double j = 0.5 * two_j;
  LaurentPoly b(1.0);
  for (int k = 0; k < two_j; ++k) b = b * c_shift(q, j + 0.5 - k) * c_shift(q, -j - 0.5 + k) * cplx(-1.0);
  return b;
}

LaurentPoly beta_pair_printed(int two_j1, int two_j2, cplx q) {
  const double s = 0.5 * (two_j1 + two_j2);
  LaurentPoly b(1.0);
  for (int k = 0; k < two_j1; ++k)
    for (int l = 0; l < two_j2; ++l) b = b * c_shift(q, s - k - l) * c_shift(q, -s + k + l);
  return b;
}

LaurentPoly beta_pair(int two_j1, int two_j2, cplx q) {
  LaurentPoly b = beta_pair_printed(two_j1, two_j2, q);
  if ((two_j1 * two_j2) % 2 != 0) b *= -1.0;
  return b;
}

LaurentPoly xi_half(int two_j, cplx q) {
  const double j = 0.5 * two_j;
  LaurentPoly x(1.0);
  for (int k = 0; k < two_j; ++k) x = x * c_shift(q, j - k - 0.5) * c_shift(q, -j + k + 2.5) * cplx(-1.0);
  return x;
}

Mat transpose_first(const Mat& m, int d1, int d2) {
  Mat out(m.rows(), m.cols());
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d1; ++b)
      out.block(b * d2, a * d2, d2, d2) = m.block(a * d2, b * d2, d2, d2);
  return out;
}

PolyMatrix transpose_first(const PolyMatrix& m, int d1, int d2) {
  PolyMatrix out(m.rows(), m.cols());
  const auto D2 = static_cast<std::size_t>(d2);
  for (std::size_t a = 0; a < static_cast<std::size_t>(d1); ++a)
    for (std::size_t b = 0; b < static_cast<std::size_t>(d1); ++b)
      for (std::size_t i = 0; i < D2; ++i)
        for (std::size_t k = 0; k < D2; ++k) out(b * D2 + i, a * D2 + k) = m(a * D2 + i, b * D2 + k);
  return out;
}

double ybe_residual(int two_j1, int two_j2, int two_j3, cplx u1, cplx u2, cplx q) {
  const std::vector<int> dims{two_j1 + 1, two_j2 + 1, two_j3 + 1};
  const Mat r12 = embed_pair(r_fused(two_j1, two_j2, q).eval(u1 / u2), dims, 0, 1);
  const Mat r13 = embed_pair(r_fused(two_j1, two_j3, q).eval(u1), dims, 0, 2);
  const Mat r23 = embed_pair(r_fused(two_j2, two_j3, q).eval(u2), dims, 1, 2);
  return rel_residual(r12 * r13 * r23, r23 * r13 * r12);
}

namespace {
double unitarity_against(int two_j1, int two_j2, cplx q, const LaurentPoly& b) {
  const PolyMatrix& r = r_fused(two_j1, two_j2, q).poly;
  return residual(r * r.subst_inv_shift(0, q), PolyMatrix::identity(r.rows()) * b);
}
}  // namespace

double unitarity_residual(int two_j1, int two_j2, cplx q) {
  return unitarity_against(two_j1, two_j2, q, beta_pair(two_j1, two_j2, q));
}

double unitarity_residual_printed(int two_j1, int two_j2, cplx q) {
  return unitarity_against(two_j1, two_j2, q, beta_pair_printed(two_j1, two_j2, q));
}

double crossing_residual(int two_j, cplx q) {
  const PolyMatrix& r = r_half_j(two_j, q).poly;
  const PolyMatrix lhs = transpose_first(r, 2, two_j + 1) * transpose_first(r.subst_inv_shift(-4, q), 2, two_j + 1);
  return residual(lhs, PolyMatrix::identity(r.rows()) * xi_half(two_j, q));
}

double symmetry_residual(int two_j1, int two_j2, cplx q) {
  const PolyMatrix& r = r_fused(two_j1, two_j2, q).poly;
  return residual(r.transpose(), r);
}

double rll_residual(int two_jn, int two_j, cplx u, cplx v, cplx q) {
  const std::vector<int> dims{two_jn + 1, 2, two_j + 1};
  const Mat r = embed_pair(r_half_j(two_j, q).eval(u / v), dims, 1, 2);
  const Mat l1 = embed_pair(lax(two_jn, 1, q).eval(u), dims, 0, 1);
  const Mat l2 = embed_pair(lax(two_jn, two_j, q).eval(v), dims, 0, 2);
  return rel_residual(r * l1 * l2, l2 * l1 * r);
}

}  // namespace qtt
