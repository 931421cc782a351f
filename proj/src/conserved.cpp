#include "qtt/conserved.hpp"

#include <map>

#include "qtt/repspace.hpp"

namespace qtt {

namespace {

Mat pauli_plus() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}
Mat pauli_minus() { return pauli_plus().transpose(); }
Mat pauli_z() {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
Mat pauli_x() { return pauli_plus() + pauli_minus(); }
Mat pauli_y() { return cplx(0, -1) * pauli_plus() + cplx(0, 1) * pauli_minus(); }

cplx pow_int(cplx x, int n) { return std::pow(x, n); }

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::vector<Mat> taylor_coefficients(const RationalMatrix& r, cplx u0, int n) {
  std::vector<Mat> a;
  std::vector<cplx> d;
  PolyMatrix num = r.num;
  LaurentPoly den = r.den;
  for (int k = 0; k <= n; ++k) {
    a.push_back(num.eval(u0) / factorial(k));
    d.push_back(den.eval(u0) / factorial(k));
    num = num.derivative();
    den = den.derivative();
  }
  if (std::abs(d[0]) == 0.0) throw SamplePole("taylor_coefficients: denominator vanishes at the expansion point");
  std::vector<Mat> c;
  for (int k = 0; k <= n; ++k) {
    Mat ck = a[k];
    for (int i = 1; i <= k; ++i) ck -= d[i] * c[k - i];
    c.push_back(ck / d[0]);
  }
  return c;
}

std::vector<Mat> log_derivatives(const RationalMatrix& r, cplx u0, int order) {
  if (order < 1) throw DimensionMismatch("log_derivatives: order must be positive");
  const std::vector<Mat> c = taylor_coefficients(r, u0, order);
  const Eigen::JacobiSVD<Mat> svd(c[0]);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0 || sv(sv.size() - 1) / sv(0) < 1e-12)
    throw SingularAtOne("transfer matrix is singular at the expansion point");
  const Eigen::PartialPivLU<Mat> lu(c[0]);
  const auto D = c[0].rows();
  // X = t0^{-1} (t - t0) as a series in the offset; ln(1 + X) = sum (-1)^{m+1} X^m / m.
  std::vector<Mat> X(order + 1, Mat::Zero(D, D));
  for (int k = 1; k <= order; ++k) X[k] = lu.solve(c[k]);
  std::vector<Mat> L(order + 1, Mat::Zero(D, D));
  std::vector<Mat> P = X;  // current power X^m
  for (int m = 1; m <= order; ++m) {
    const double coef = (m % 2 == 1 ? 1.0 : -1.0) / m;
    for (int k = m; k <= order; ++k) L[k] += coef * P[k];
    std::vector<Mat> next(order + 1, Mat::Zero(D, D));
    for (int a = m; a <= order; ++a)
      for (int b = 1; a + b <= order; ++b) next[a + b] += P[a] * X[b];
    P = std::move(next);
  }
  std::vector<Mat> out;
  for (int k = 1; k <= order; ++k) out.push_back(factorial(k) * L[k]);
  return out;
}

ChainConfig homogeneous_config(int two_j, std::size_t N, const BoundaryParams& b, cplx q) {
  ChainConfig cfg;
  cfg.two_js.assign(N, two_j);
  cfg.inhoms.assign(N, 1.0);
  cfg.boundary = b;
  cfg.q = q;
  return cfg;
}

Hamiltonian hamiltonian(int order, int two_j, std::size_t N, const BoundaryParams& b, cplx q) {
  const Chain ch(homogeneous_config(two_j, N, b, q));
  const RationalMatrix t = ch.transfer_tilde_poly(two_j);
  return {order, two_j, N, log_derivatives(t, 1.0, order).back()};
}

Mat site_op(const Mat& op, std::size_t site, std::size_t N) {
  if (site < 1 || site > N) throw DimensionMismatch("site_op: site out of range");
  const auto d = op.rows();
  Mat out = Mat::Identity(1, 1);
  for (std::size_t pos = 0; pos < N; ++pos) out = kron(out, pos == N - site ? op : Mat(Mat::Identity(d, d)));
  return out;
}

Mat hxxz_half(std::size_t N, const BoundaryParams& b, cplx q) {
  const KParams &p = b.left, &r = b.right;
  if (std::abs(p.eps_plus + p.eps_minus) == 0.0 || std::abs(r.eps_plus + r.eps_minus) == 0.0)
    throw DegenerateBoundary("hxxz_half: eps_+ + eps_- vanishes");
  const std::size_t D = std::size_t{1} << N;
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), sp = pauli_plus(), sm = pauli_minus();
  Mat H = Mat::Zero(D, D);
  for (std::size_t k = 1; k < N; ++k)
    H += site_op(sx, k + 1, N) * site_op(sx, k, N) + site_op(sy, k + 1, N) * site_op(sy, k, N) +
         (q + 1.0 / q) / 2.0 * site_op(sz, k + 1, N) * site_op(sz, k, N);
  const cplx qq = q - 1.0 / q;
  H += 2.0 / (p.eps_plus + p.eps_minus) *
       (qq / 4.0 * (p.eps_plus - p.eps_minus) * site_op(sz, 1, N) + p.k_plus * site_op(sp, 1, N) +
        p.k_minus * site_op(sm, 1, N));
  H += 2.0 / (r.eps_plus + r.eps_minus) *
       (qq / 4.0 * (r.eps_plus - r.eps_minus) * site_op(sz, N, N) + r.k_plus * site_op(sp, N, N) +
        r.k_minus * site_op(sm, N, N));
  return H;
}

HParams h_params(const BoundaryParams& b) {
  const KParams &p = b.left, &r = b.right;
  const cplx s = p.eps_plus + p.eps_minus, sb = r.eps_plus + r.eps_minus;
  if (std::abs(s) == 0.0 || std::abs(sb) == 0.0) throw DegenerateBoundary("h_params: eps_+ + eps_- vanishes");
  return {2.0 * p.k_plus / s,  2.0 * p.k_minus / s, (p.eps_plus - p.eps_minus) / s,
          2.0 * r.k_plus / sb, 2.0 * r.k_minus / sb, (r.eps_plus - r.eps_minus) / sb};
}

Mat hxxz_param(std::size_t N, const HParams& h, cplx q) {
  const std::size_t D = std::size_t{1} << N;
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), sp = pauli_plus(), sm = pauli_minus();
  Mat H = Mat::Zero(D, D);
  for (std::size_t k = 1; k < N; ++k)
    H += site_op(sx, k, N) * site_op(sx, k + 1, N) + site_op(sy, k, N) * site_op(sy, k + 1, N) +
         (q + 1.0 / q) / 2.0 * site_op(sz, k, N) * site_op(sz, k + 1, N);
  const cplx qq = q - 1.0 / q;
  H += qq / 2.0 * h.h_z * site_op(sz, 1, N) + h.h_plus * site_op(sp, 1, N) + h.h_minus * site_op(sm, 1, N);
  H += qq / 2.0 * h.hbar_z * site_op(sz, N, N) + h.hbar_plus * site_op(sp, N, N) + h.hbar_minus * site_op(sm, N, N);
  return H;
}

namespace {

struct Spin1 {
  Mat x, y, z, plus, minus;
};

Spin1 spin1_matrices() {
  const double s2 = std::sqrt(2.0);
  Spin1 s;
  s.x = Mat::Zero(3, 3);
  s.x(0, 1) = s.x(1, 0) = s.x(1, 2) = s.x(2, 1) = 1.0 / s2;
  s.y = Mat::Zero(3, 3);
  s.y(0, 1) = cplx(0, -1) / s2;
  s.y(1, 0) = cplx(0, 1) / s2;
  s.y(1, 2) = cplx(0, -1) / s2;
  s.y(2, 1) = cplx(0, 1) / s2;
  s.z = Mat::Zero(3, 3);
  s.z(0, 0) = 1.0;
  s.z(2, 2) = -1.0;
  s.plus = s.x + cplx(0, 1) * s.y;
  s.minus = s.x - cplx(0, 1) * s.y;
  return s;
}

// [A,B]_x = x A B - x^{-1} B A
Mat qcomm(const Mat& a, const Mat& b, cplx x) { return x * a * b - b * a / x; }

Mat spin1_boundary(std::size_t N, std::size_t site, const KParams& p, cplx q) {
  const Spin1 s = spin1_matrices();
  auto o = [&](const Mat& m) { return site_op(m, site, N); };
  const cplx e1 = p.eps_plus, e2 = p.eps_minus, k1 = p.k_plus, k2 = p.k_minus;
  const cplx denom = k1 * k2 - e1 * e2 * (q + 1.0 / q) - (e1 * e1 + e2 * e2);
  if (std::abs(denom) == 0.0) throw DegenerateBoundary("spin-1 boundary term: vanishing denominator");
  const cplx qq = q - 1.0 / q, sq = qpow(q, 0.5);
  Mat X = (e1 * e2 * (1.0 / q - q) + k1 * k2 * (q + 1.0 / q) / (1.0 / q - q)) * o(s.z * s.z) +
          (e2 * e2 - e1 * e1) * o(s.z) + (k1 * k1 * o(s.plus * s.plus) + k2 * k2 * o(s.minus * s.minus)) / qq;
  X += std::sqrt(2.0 * (q + 1.0 / q)) / qq *
       (e1 * (k1 * qcomm(o(s.plus), o(s.z), sq) + k2 * qcomm(o(s.z), o(s.minus), sq)) +
        e2 * (k1 * qcomm(o(s.plus), o(s.z), 1.0 / sq) + k2 * qcomm(o(s.z), o(s.minus), 1.0 / sq)));
  return cfun(q * q) / 2.0 / denom * X;
}

}  // namespace

Mat hxxz_spin1(std::size_t N, const BoundaryParams& b, cplx q) {
  const Spin1 s = spin1_matrices();
  std::size_t D = 1;
  for (std::size_t n = 0; n < N; ++n) D *= 3;
  Mat H = Mat::Zero(D, D);
  const cplx a = (qpow(q, 0.5) - qpow(q, -0.5)) * (qpow(q, 0.5) - qpow(q, -0.5)) / 2.0;
  for (std::size_t n = 1; n < N; ++n) {
    Mat ss = Mat::Zero(D, D);
    for (const Mat* S : {&s.x, &s.y, &s.z}) ss += site_op(*S, n + 1, N) * site_op(*S, n, N);
    const Mat zz = site_op(s.z, n + 1, N) * site_op(s.z, n, N);
    const Mat flip = site_op(s.plus, n + 1, N) * site_op(s.minus, n, N) + site_op(s.minus, n + 1, N) * site_op(s.plus, n, N);
    H += ss - ss * ss - a * (zz * flip + flip * zz);
    H += cfun(q) * cfun(q) / 2.0 * (zz - zz * zz + site_op(s.z * s.z, n, N) + site_op(s.z * s.z, n + 1, N));
  }
  H += spin1_boundary(N, 1, b.left, q) + spin1_boundary(N, N, b.right, q);
  return H;
}

Mat hxxz_explicit(int two_j, std::size_t N, const BoundaryParams& b, cplx q) {
  if (two_j == 1) return hxxz_half(N, b, q);
  if (two_j == 2) return hxxz_spin1(N, b, q);
  throw DimensionMismatch("hxxz_explicit: only spins 1/2 and 1 are printed");
}

AffineFit affine_fit(const Mat& H, const Mat& A) {
  const auto D = H.rows();
  Mat X(D * D, 2);
  Vec y(D * D);
  for (Eigen::Index i = 0; i < D; ++i)
    for (Eigen::Index j = 0; j < D; ++j) {
      X(i * D + j, 0) = A(i, j);
      X(i * D + j, 1) = i == j ? 1.0 : 0.0;
      y(i * D + j) = H(i, j);
    }
  const Vec sol = X.colPivHouseholderQr().solve(y);
  AffineFit f{sol(0), sol(1), 0.0};
  f.residual = (X * sol - y).norm() / std::max(y.norm(), 1e-300);
  return f;
}

double residual_mod_identity(const Mat& X, const Mat& ref, cplx* scalar) {
  const auto D = X.rows();
  const cplx s = X.trace() / static_cast<double>(D);
  if (scalar) *scalar = s;
  const double scale = ref.norm();
  if (scale == 0.0) return 0.0;
  return (X - s * Mat::Identity(D, D)).norm() / scale;
}

RationalMatrix transfer_from_modes_poly(const ChainConfig& cfg) {
  const cplx q = cfg.q, kap = q + 1.0 / q;
  const TruncationData t = truncation_data(cfg);
  const std::vector<Mat> I = i_modes(cfg, cfg.N());
  const std::size_t D = cfg.dim();
  const Mat Id = Mat::Identity(D, D);
  PolyMatrix psi = PolyMatrix::constant(Mat::Zero(D, D));
  for (std::size_t k = 0; k < cfg.N(); ++k) psi += PolyMatrix::constant(I[k]) * t.P[k];
  psi += PolyMatrix::constant(i0_scalar(cfg.boundary, q) * Id) * t.h0;
  const KParams& b = cfg.boundary.right;
  const LaurentPoly x = LaurentPoly::monomial(q, 4) + LaurentPoly::monomial(1.0 / q, -4);
  const LaurentPoly scalar = (x * t.eps_plus_N + LaurentPoly(kap * t.eps_minus_N)) * b.eps_plus +
                             (x * t.eps_minus_N + LaurentPoly(kap * t.eps_plus_N)) * b.eps_minus;
  PolyMatrix num = psi * (LaurentPoly::c_of(1.0, 4) * LaurentPoly::c_of(q * q, 4)) + PolyMatrix::constant(Id) * scalar;
  LaurentPoly den(1.0);
  for (std::size_t n = 0; n < cfg.N(); ++n) {
    const cplx a = qpow(q, 0.5 * cfg.two_js[n] + 0.5);
    den = den * LaurentPoly::c_of(a * cfg.inhoms[n]) * LaurentPoly::c_of(a / cfg.inhoms[n]);
  }
  return {num, den};
}

ModeHamiltonianCheck h_via_I(std::size_t N, const BoundaryParams& b, cplx q) {
  const ChainConfig cfg = homogeneous_config(1, N, b, q);
  const Chain ch(cfg);
  const KParams &p = b.left, &r = b.right;
  const cplx kap = q + 1.0 / q, pre = (p.eps_plus + p.eps_minus) * (r.eps_plus + r.eps_minus);
  const int n = static_cast<int>(N);
  const std::size_t D = cfg.dim();
  const Mat Id = Mat::Identity(D, D);

  const RationalMatrix t = ch.transfer_tilde_poly(1);
  const std::vector<Mat> tc = taylor_coefficients(t, 1.0, 1);
  const std::vector<Mat> H = log_derivatives(t, 1.0, 2);

  const TruncationData td = truncation_data(cfg);
  const std::vector<Mat> I = i_modes(cfg, N);
  Mat psi1 = Mat::Zero(D, D), dpsi1 = Mat::Zero(D, D);
  for (std::size_t k = 0; k < N; ++k) {
    psi1 += td.P[k].eval(1.0) * I[k];
    dpsi1 += td.P[k].derivative().eval(1.0) * I[k];
  }
  const cplx cq = cfun(q), cq2 = cfun(q * q), cqN = pow_int(cq, -2 * n);

  ModeHamiltonianCheck out;
  auto add = [&](const std::string& name, double v) { out.residuals.push_back({name, v}); };

  add("t(1) scalar", rel_residual(tc[0], kap * pre * Id));

  const Mat R1 = 4.0 * cq * cqN / pre * psi1;
  add("H1 printed mod identity", residual_mod_identity(H[0] - R1, H[0], &out.h1_offset));

  const cplx scalar1 = 2.0 * cq * cqN * (r.eps_plus * td.eps_plus_N + r.eps_minus * td.eps_minus_N) -
                       2.0 * static_cast<double>(n) * kap * kap / cq * (r.eps_plus + r.eps_minus) *
                           (p.eps_plus + p.eps_minus);
  const Mat dt1 = 4.0 * cq2 * cqN * (psi1 + td.h0.eval(1.0) * i0_scalar(b, q) * Id) + scalar1 * Id;
  add("t'(1) from I-operators", rel_residual(tc[1], dt1));

  // d/du [c(u^2 q^2) c(uq)^{-2N} psi(u)] at u = 1
  const cplx df = 2.0 * q * q + 2.0 / (q * q);
  const cplx dg = -2.0 * n * pow_int(cq, -2 * n - 1) * (q + 1.0 / q);
  const Mat dA = (df * cqN + cq2 * dg) * psi1 + cq2 * cqN * dpsi1;
  const Mat R2 = (-4.0 * cq2 * cqN * psi1 + 8.0 * dA) / (kap * pre) - dt1 * dt1 / ((kap * pre) * (kap * pre));
  add("H2 printed", rel_residual(H[1], R2));
  add("H2 printed mod identity", residual_mod_identity(H[1] - R2, H[1], &out.h2_offset));

  const std::vector<Mat> Hm = log_derivatives(transfer_from_modes_poly(cfg), 1.0, 2);
  add("H1 from I-operators", rel_residual(H[0], Hm[0]));
  add("H2 from I-operators", rel_residual(H[1], Hm[1]));
  add("[H1,H2]", commutator_residual(H[0], H[1]));
  return out;
}

cplx delta_c(int k, cplx q) {
  return -pow_int(q + 1.0 / q, k) * (qpow(q, k) + qpow(q, -k)) / pow_int(q, 2 * k);
}

namespace {

// Expansion of a/b in descending powers of u down to u^{lowest_n2/2}.
std::map<int, cplx> series_div(const LaurentPoly& a, const LaurentPoly& b, int lowest_n2) {
  const int m = b.hi();
  const cplx bm = b.coeff(m);
  if (std::abs(bm) <= 1e-13 * b.max_abs()) throw SeriesDivergence("series_div: leading coefficient vanishes");
  std::map<int, cplx> rem;
  for (int e = a.lo(); e <= a.hi(); ++e) rem[e] = a.coeff(e);
  std::map<int, cplx> out;
  for (int e = a.hi() - m; e >= lowest_n2; --e) {
    const cplx c = rem[e + m] / bm;
    out[e] = c;
    if (c == 0.0) continue;
    for (int k = b.lo(); k <= b.hi(); ++k) rem[k + e] -= c * b.coeff(k);
  }
  return out;
}

}  // namespace

DeltaSeries delta_series(const ChainConfig& cfg, int K) {
  const cplx q = cfg.q;
  const KParams& p = cfg.boundary.left;
  if (p.k_plus == 0.0 || p.k_minus == 0.0) throw DiagonalBoundaryUnsupported("delta_series requires k_+ k_- != 0");
  const TruncationData td = truncation_data(cfg);
  LaurentPoly A = gamma_minus(p, q) * cfun(q);
  for (std::size_t n = 0; n < cfg.N(); ++n) {
    const double jn = 0.5 * cfg.two_js[n];
    for (cplx x : {cfg.inhoms[n], 1.0 / cfg.inhoms[n]})
      A = A * LaurentPoly::c_of(qpow(q, jn + 1.5) * x) * LaurentPoly::c_of(qpow(q, -jn + 0.5) * x);
  }
  const LaurentPoly cq2 = LaurentPoly::c_of(q * q, 4);
  const LaurentPoly B = LaurentPoly::c_of(1.0, 4) * cq2 * cq2 * td.h0 * td.h0.shift_q(2, q);
  std::map<int, cplx> s = series_div(A, B, -4 * K);
  s[0] += p.rho(q) / cfun(q);
  DeltaSeries out;
  double scale = 0.0;
  for (const auto& [e, c] : s) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) scale = 1.0;
  for (const auto& [e, c] : s) {
    if (e >= 0) out.nonnegative_residual = std::max(out.nonnegative_residual, std::abs(c) / scale);
    if (e % 4 != 0) out.odd_residual = std::max(out.odd_residual, std::abs(c) / scale);
  }
  for (int k = 1; k <= K; ++k) out.delta.push_back(s[-4 * k] / delta_c(k, q));
  return out;
}

cplx delta2_printed_one(const ChainConfig& cfg) {
  const cplx q = cfg.q, kap = q + 1.0 / q, q2 = q * q + 1.0 / (q * q);
  const KParams& p = cfg.boundary.left;
  const cplx ep = p.eps_plus, em = p.eps_minus, v = cfg.inhoms.at(0);
  const int tj = cfg.two_js.at(0);
  const cplx v2 = v * v;
  return cfun(q) / q2 *
         (ep * em / (kap * kap) * q2 * w0(tj, q) * (v2 + 1.0 / v2) -
          p.k_plus * p.k_minus / (cfun(q) * cfun(q) * kap * kap) * cfun(qpow(q, tj)) * cfun(qpow(q, tj + 2)) *
              cfun(q * v2) * cfun(v2 / q) -
          ep * ep * em * em * cfun(q) * cfun(q) / p.rho(q) - ep * ep - em * em);
}

cplx delta2_printed_two(const ChainConfig& cfg) {
  const cplx q = cfg.q, kap = q + 1.0 / q, q2 = q * q + 1.0 / (q * q);
  const KParams& p = cfg.boundary.left;
  const cplx v2 = cfg.inhoms.at(1) * cfg.inhoms.at(1);
  const int tj = cfg.two_js.at(1);
  return delta2_printed_one(cfg) - p.k_plus * p.k_minus * cfun(qpow(q, tj)) * cfun(qpow(q, tj + 2)) * cfun(q * v2) *
                                       cfun(v2 / q) / (cfun(q * q) * kap * q2);
}

namespace {

struct OnsagerWords {
  cplx q, rho, d1, d2;
  Mat A, B, I;
  Mat m(std::initializer_list<const Mat*> xs) const {
    Mat r = I;
    for (const Mat* x : xs) r = r * *x;
    return r;
  }
  Mat G1(const Mat& a, const Mat& b) const { return q * b * a - a * b / q + d1 * I; }
  Mat Wm1(const Mat& a, const Mat& b) const {
    const cplx q2 = q * q + 1.0 / (q * q);
    return (q2 * a * b * a - a * a * b - b * a * a) / rho + b + d1 * (q - 1.0 / q) / rho * a;
  }
  Mat G2() const {
    const cplx q2 = q * q + 1.0 / (q * q), qi = 1.0 / q;
    const Mat &a = A, &b = B;
    const Mat poly = (qi * qi * qi + qi) * a * a * b * b - (q * q * q + q) * b * b * a * a +
                     (qi * qi * qi - q * q * q) * (a * b * b * a + b * a * a * b) -
                     (std::pow(qi, 5) + qi * qi * qi + 2.0 * qi) * a * b * a * b +
                     (std::pow(q, 5) + q * q * q + 2.0 * q) * b * a * b * a + rho * (q - qi) * (a * a + b * b);
    return poly / (rho * q2) + d1 * (q - qi) / rho * (q * b * a - a * b / q) +
           (d2 - d1 * d1 * (q - qi) / (rho * q2)) * I;
  }
};

OnsagerWords onsager_words(const ChainConfig& cfg, const AlternatingOps& ops) {
  const DeltaSeries ds = delta_series(cfg, 2);
  const auto D = ops.W_minus[0].rows();
  return {cfg.q, cfg.boundary.left.rho(cfg.q), ds.delta[0], ds.delta[1], ops.W_minus[0], ops.W_plus[0],
          Mat::Identity(D, D)};
}

}  // namespace

std::vector<NamedResidual> qonsager_reconstruct(const ChainConfig& cfg) {
  const AlternatingOps ops = alternating_ops(cfg, std::max<std::size_t>(cfg.N(), 3));
  const OnsagerWords w = onsager_words(cfg, ops);
  const cplx q = cfg.q, rho = w.rho;
  std::vector<NamedResidual> out;
  out.push_back({"G1", rel_residual(w.G1(w.A, w.B), ops.G[0])});
  out.push_back({"Gtilde1 (Omega image)", rel_residual(w.G1(w.B, w.A), ops.Gtilde[0])});
  out.push_back({"W-1", rel_residual(w.Wm1(w.A, w.B), ops.W_minus[1])});
  out.push_back({"W2 (Omega image)", rel_residual(w.Wm1(w.B, w.A), ops.W_plus[1])});
  const Mat G2 = w.G2();
  out.push_back({"G2", rel_residual(G2, ops.G[1])});
  const Mat Wm2 = (q * w.A * G2 - G2 * w.A / q) / rho + w.Wm1(w.B, w.A);
  out.push_back({"W-2 via G2", rel_residual(Wm2, ops.W_minus[2])});
  return out;
}

double w_minus2_printed_residual(const ChainConfig& cfg) {
  const AlternatingOps ops = alternating_ops(cfg, std::max<std::size_t>(cfg.N(), 3));
  const OnsagerWords w = onsager_words(cfg, ops);
  const cplx q = cfg.q, rho = w.rho, r2 = rho * rho, qq = q - 1.0 / q, d1 = w.d1, d2 = w.d2;
  auto Q = [&](double n) { return qnum(n, q); };
  const cplx w1 = 1.0 / r2, w2 = -Q(2) * Q(8) / (r2 * Q(4) * Q(4)), w3 = -Q(4) / (r2 * Q(2)),
             w4 = (Q(2) * Q(3) * Q(8) / (Q(4) * Q(4)) + 1.0) / r2, w5 = 1.0 / (r2 * Q(3)),
             w6 = -Q(2) * Q(8) / (r2 * Q(3) * Q(4)), w7 = Q(2) * Q(2) / (r2 * Q(3) * Q(4)), w8 = -1.0 / rho,
             w9 = -1.0 / (rho * Q(3)), w10 = -qq / r2 * d1,
             w11 = (Q(2) * Q(3) * Q(8) / (Q(4) * Q(4)) + 1.0) / (r2 * Q(3)), w12 = qq * Q(4) / (r2 * Q(2)) * d1,
             w13 = qq * qq * Q(2) / (rho * Q(4)), w14 = 1.0 - qq * qq * Q(2) / (r2 * Q(4)) * d1 * d1 + qq / rho * d2,
             w15 = qq / rho * d1;
  const Mat &A = w.A, &B = w.B;
  const Mat W = w1 * w.m({&A, &A, &A, &B, &B}) + w2 * w.m({&A, &A, &B, &B, &A}) +
                w3 * (w.m({&B, &A, &A, &B, &A}) + w.m({&A, &A, &B, &A, &B})) + w4 * w.m({&A, &B, &A, &B, &A}) +
                w5 * w.m({&B, &B, &A, &A, &A}) + w6 * w.m({&A, &B, &B, &A, &A}) + w7 * w.m({&B, &A, &A, &A, &B}) +
                w8 * w.m({&A, &B, &B}) + w9 * w.m({&B, &B, &A}) + w10 * (w.m({&A, &A, &B}) + w.m({&B, &A, &A})) +
                w11 * w.m({&B, &A, &B}) + w12 * w.m({&A, &B, &A}) + w13 * w.m({&A, &A, &A}) + w14 * A + w15 * B;
  return rel_residual(W, ops.W_minus[2]);
}

}  // namespace qtt
