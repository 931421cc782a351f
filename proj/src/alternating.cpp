#include "qtt/alternating.hpp"

#include <string>

#include "qtt/repspace.hpp"

namespace qtt {

cplx w0(int two_j, cplx q) { return qpow(q, two_j + 1.0) + qpow(q, -two_j - 1.0); }

namespace {

cplx vsum(cplx v) { return v * v + 1.0 / (v * v); }

// Elementary symmetric polynomial e_m of the list.
cplx elementary(const std::vector<cplx>& a, std::size_t m) {
  std::vector<cplx> e(m + 1, 0.0);
  e[0] = 1.0;
  for (cplx x : a)
    for (std::size_t k = m; k >= 1; --k) e[k] += x * e[k - 1];
  return e[m];
}

ChainConfig prefix(const ChainConfig& cfg, std::size_t M) {
  ChainConfig c = cfg;
  c.two_js.resize(M);
  c.inhoms.resize(M);
  return c;
}

struct Modes {
  std::vector<Mat> Wm, Wp, G, Gt;
};

// Fills each family up to K entries from the truncation relation of level M.
void extend(Modes& m, const std::vector<cplx>& d, std::pair<cplx, cplx> eps, std::size_t M, std::size_t K) {
  const auto D = m.Wm.empty() ? 1 : m.Wm[0].rows();
  const Mat I = Mat::Identity(D, D);
  while (m.Wm.size() < K) {
    const std::size_t l = m.Wm.size() - M;
    const double even = (l + 1) % 2, odd = l % 2;
    Mat s = (even * eps.first + odd * eps.second) * I;
    for (std::size_t k = 0; k < M; ++k) s += d[k] * m.Wm[k + l];
    m.Wm.push_back(-s / d[M]);
    s = (even * eps.second + odd * eps.first) * I;
    for (std::size_t k = 0; k < M; ++k) s += d[k] * m.Wp[k + l];
    m.Wp.push_back(-s / d[M]);
    s = Mat::Zero(D, D);
    for (std::size_t k = 0; k < M; ++k) s += d[k] * m.G[k + l];
    m.G.push_back(-s / d[M]);
    s = Mat::Zero(D, D);
    for (std::size_t k = 0; k < M; ++k) s += d[k] * m.Gt[k + l];
    m.Gt.push_back(-s / d[M]);
  }
}

}  // namespace

std::vector<cplx> truncation_coefficients(const ChainConfig& cfg) {
  const cplx q = cfg.q, kap = q + 1.0 / q, qq = q - 1.0 / q;
  const KParams& p = cfg.boundary.left;
  const std::size_t N = cfg.N();
  if (N == 0) return {-1.0};
  std::vector<cplx> al;
  for (std::size_t n = 0; n < N; ++n) al.push_back(vsum(cfg.inhoms[n]) * w0(cfg.two_js[n], q) / kap);
  al[0] += p.eps_plus * p.eps_minus * qq * qq / (p.k_plus * p.k_minus * kap);
  std::vector<cplx> d;
  for (std::size_t n = 0; n <= N; ++n) {
    const double sign = ((N + 1 - n) % 2 == 0) ? 1.0 : -1.0;
    d.push_back(sign * std::pow(kap, static_cast<int>(n)) * elementary(al, N - n));
  }
  return d;
}

std::pair<cplx, cplx> truncated_eps(const ChainConfig& cfg) {
  cplx ep = cfg.boundary.left.eps_plus, em = cfg.boundary.left.eps_minus;
  for (std::size_t n = 0; n < cfg.N(); ++n) {
    const cplx w = w0(cfg.two_js[n], cfg.q), V = vsum(cfg.inhoms[n]);
    const cplx nep = w * em - V * ep, nem = w * ep - V * em;
    ep = nep;
    em = nem;
  }
  return {ep, em};
}

TruncationData truncation_data(const ChainConfig& cfg) {
  const cplx q = cfg.q, kap = q + 1.0 / q;
  TruncationData t;
  t.d = truncation_coefficients(cfg);
  std::tie(t.eps_plus_N, t.eps_minus_N) = truncated_eps(cfg);
  for (int tj : cfg.two_js) t.w0.push_back(w0(tj, q));
  const LaurentPoly U = LaurentPoly::U(q);
  const std::size_t N = cfg.N();
  std::vector<LaurentPoly> Upow{LaurentPoly(1.0)};
  for (std::size_t k = 1; k <= N; ++k) Upow.push_back(Upow.back() * U);
  LaurentPoly h;
  for (std::size_t k = 0; k < t.d.size(); ++k) h += Upow[k] * t.d[k];
  t.h0 = h * (-1.0 / kap);
  for (std::size_t k = 0; k < N; ++k) {
    LaurentPoly p;
    for (std::size_t n = k; n < N; ++n) p += Upow[n - k] * t.d[n + 1];
    t.P.push_back(p * (-1.0 / kap));
  }
  return t;
}

AlternatingOps alternating_ops(const ChainConfig& cfg, std::size_t K) {
  const KParams& bp = cfg.boundary.left;
  if (bp.k_plus == 0.0 || bp.k_minus == 0.0)
    throw DiagonalBoundaryUnsupported("alternating modes require k_+ k_- != 0");
  if (K < cfg.N()) throw DimensionMismatch("alternating_ops: need at least N modes");
  const cplx q = cfg.q, kap = q + 1.0 / q, qq = q - 1.0 / q, q2 = q * q - 1.0 / (q * q);
  const cplx sq = qpow(q, 0.5), ep = bp.eps_plus, em = bp.eps_minus, kp = bp.k_plus, km = bp.k_minus;
  const Mat one = Mat::Identity(1, 1);

  Modes m;
  m.Wm.push_back(ep * one);
  m.Wp.push_back(em * one);
  m.G.push_back(ep * em * qq * one);
  m.Gt.push_back(ep * em * qq * one);
  extend(m, {-1.0}, {ep, em}, 0, K);

  const cplx Gz = kp * km * kap * kap / qq;
  for (std::size_t M = 1; M <= cfg.N(); ++M) {
    const int tjn = cfg.two_js[M - 1];
    const cplx vn = cfg.inhoms[M - 1];
    const SpinRep rep = spin_rep(tjn, q);
    const Mat &Sp = rep.splus, &Sm = rep.sminus;
    const Mat Qh = rep.qpow_s3(0.5), Qmh = rep.qpow_s3(-0.5), Q1 = rep.qpow_s3(1.0), Qm1 = rep.qpow_s3(-1.0);
    const Modes& p = m;
    const auto Dp = p.Wm[0].rows();
    const Mat I = Mat::Identity(Dp, Dp), In = Mat::Identity(rep.dim(), rep.dim());
    const auto DN = rep.dim() * Dp;
    const Mat IN = Mat::Identity(DN, DN);
    const cplx V = vsum(vn), w = w0(tjn, q);

    auto Wk = [&](std::size_t k) -> Mat { return k >= 1 ? p.Wp[k - 1] : Mat(Mat::Zero(Dp, Dp)); };
    auto Wmk1 = [&](std::size_t k) -> Mat { return k >= 1 ? p.Wm[k - 1] : Mat(Mat::Zero(Dp, Dp)); };
    auto Gk = [&](std::size_t k) -> Mat { return k >= 1 ? p.G[k - 1] : Mat(Gz * I); };
    auto Gtk = [&](std::size_t k) -> Mat { return k >= 1 ? p.Gt[k - 1] : Mat(Gz * I); };

    Modes n;
    auto GkN = [&](std::size_t k) -> Mat { return k >= 1 ? n.G[k - 1] : Mat(Gz * IN); };
    auto GtkN = [&](std::size_t k) -> Mat { return k >= 1 ? n.Gt[k - 1] : Mat(Gz * IN); };
    auto WkN = [&](std::size_t k) -> Mat { return k >= 1 ? n.Wp[k - 1] : Mat(Mat::Zero(DN, DN)); };
    auto Wmk1N = [&](std::size_t k) -> Mat { return k >= 1 ? n.Wm[k - 1] : Mat(Mat::Zero(DN, DN)); };

    const Mat SpQh = Sp * Qh, SpQmh = Sp * Qmh, SmQh = Sm * Qh, SmQmh = Sm * Qmh;
    for (std::size_t k = 0; k < M; ++k) {
      if (k == 0) {
        const Mat a = kp * vn * sq * SpQh + km / vn / sq * SmQh;
        n.Wm.push_back(kron(a, I) + kron(Q1, p.Wm[0]));
        const Mat b = kp / vn / sq * SpQmh + km * vn * sq * SmQmh;
        n.Wp.push_back(kron(b, I) + kron(Qm1, p.Wp[0]));
      } else {
        const cplx pre = qq / (kp * km * kap * kap);
        n.Wm.push_back(kron((w * In - kap * Q1) / kap, Wk(k)) - V / kap * kron(In, Wmk1(k)) +
                       V * w / (kap * kap) * Wmk1N(k) +
                       pre * (kron(kp * vn * sq * SpQh, Gk(k)) + kron(km / vn / sq * SmQh, Gtk(k))) +
                       kron(Q1, p.Wm[k]));
        n.Wp.push_back(kron((w * In - kap * Qm1) / kap, Wmk1(k)) - V / kap * kron(In, Wk(k)) +
                       V * w / (kap * kap) * WkN(k) +
                       pre * (kron(kp / vn / sq * SpQmh, Gk(k)) + kron(km * vn * sq * SmQmh, Gtk(k))) +
                       kron(Qm1, p.Wp[k]));
      }
      n.G.push_back(km * qq * qq / (kp * kap) * kron(Sm * Sm, Gtk(k)) -
                    1.0 / kap * kron(vn * vn * Q1 + 1.0 / (vn * vn) * Qm1, Gk(k)) + kron(In, p.G[k]) +
                    q2 * (kron(km * vn / sq * SmQh, p.Wm[k] - Wk(k)) + kron(km / vn * sq * SmQmh, p.Wp[k] - Wmk1(k))) +
                    V * w / (kap * kap) * GkN(k));
      n.Gt.push_back(kp * qq * qq / (km * kap) * kron(Sp * Sp, Gk(k)) -
                     1.0 / kap * kron(vn * vn * Qm1 + 1.0 / (vn * vn) * Q1, Gtk(k)) + kron(In, p.Gt[k]) +
                     q2 * (kron(kp / vn * sq * SpQh, p.Wm[k] - Wk(k)) + kron(kp * vn / sq * SpQmh, p.Wp[k] - Wmk1(k))) +
                     V * w / (kap * kap) * GtkN(k));
    }
    const ChainConfig sub = prefix(cfg, M);
    extend(n, truncation_coefficients(sub), truncated_eps(sub), M, K);
    m = std::move(n);
  }
  return {m.Wm, m.Wp, m.G, m.Gt};
}

namespace {

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }
Mat qcomm(const Mat& a, const Mat& b, cplx q) { return q * a * b - b * a / q; }

// ||lhs|| / max(||scale||, tiny)
double rel(const Mat& lhs, const Mat& scale) { return lhs.norm() / std::max(scale.norm(), 1e-300); }

std::string idx(const char* name, std::size_t k) { return std::string(name) + "[" + std::to_string(k) + "]"; }
std::string idx(const char* name, std::size_t k, std::size_t l) {
  return std::string(name) + "[" + std::to_string(k) + "," + std::to_string(l) + "]";
}

}  // namespace

std::vector<NamedResidual> aq_relations(const ChainConfig& cfg, std::size_t kmax) {
  const cplx q = cfg.q, kap = q + 1.0 / q, rho = cfg.boundary.left.rho(q);
  const std::size_t N = cfg.N();
  const AlternatingOps o = alternating_ops(cfg, std::max(N, kmax + 2));
  const auto &Wm = o.W_minus, &Wp = o.W_plus, &G = o.G, &Gt = o.Gtilde;
  std::vector<NamedResidual> out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    const Mat dG = (Gt[k] - G[k]) / kap;
    const Mat s1 = Wm[0] * Wp[k];
    out.push_back({idx("qo1a", k), rel(comm(Wm[0], Wp[k]) - dG, s1)});
    out.push_back({idx("qo1b", k), rel(comm(Wm[k], Wp[0]) - dG, s1)});
    const Mat r2 = rho * Wm[k + 1] - rho * Wp[k];
    const Mat s2 = qcomm(Wm[0], G[k], q);
    out.push_back({idx("qo2a", k), rel(s2 - r2, s2)});
    out.push_back({idx("qo2b", k), rel(qcomm(Gt[k], Wm[0], q) - r2, s2)});
    const Mat r3 = rho * Wp[k + 1] - rho * Wm[k];
    const Mat s3 = qcomm(G[k], Wp[0], q);
    out.push_back({idx("qo3a", k), rel(s3 - r3, s3)});
    out.push_back({idx("qo3b", k), rel(qcomm(Wp[0], Gt[k], q) - r3, s3)});
    for (std::size_t l = 0; l <= kmax; ++l) {
      out.push_back({idx("qo4", k, l), std::max(rel(comm(Wm[k], Wm[l]), Wm[k] * Wm[l]),
                                                rel(comm(Wp[k], Wp[l]), Wp[k] * Wp[l]))});
      out.push_back({idx("qo5", k, l), rel(comm(Wm[k], Wp[l]) + comm(Wp[k], Wm[l]), Wm[k] * Wp[l])});
      out.push_back({idx("qo6", k, l), rel(comm(Wm[k], G[l]) + comm(G[k], Wm[l]), Wm[k] * G[l])});
      out.push_back({idx("qo7", k, l), rel(comm(Wm[k], Gt[l]) + comm(Gt[k], Wm[l]), Wm[k] * Gt[l])});
      out.push_back({idx("qo8", k, l), rel(comm(Wp[k], G[l]) + comm(G[k], Wp[l]), Wp[k] * G[l])});
      out.push_back({idx("qo9", k, l), rel(comm(Wp[k], Gt[l]) + comm(Gt[k], Wp[l]), Wp[k] * Gt[l])});
      out.push_back({idx("qo10", k, l), std::max(rel(comm(G[k], G[l]), G[k] * G[l]),
                                                 rel(comm(Gt[k], Gt[l]), Gt[k] * Gt[l]))});
      out.push_back({idx("qo11", k, l), rel(comm(Gt[k], G[l]) + comm(G[k], Gt[l]), Gt[k] * G[l])});
    }
  }
  if (N > 0) {
    // Truncation at l = 0 with the first modes beyond the computed range.
    const TruncationData td = truncation_data(cfg);
    const auto D = Wm[0].rows();
    const Mat Id = Mat::Identity(D, D);
    const Mat WmN = (qcomm(Wm[0], G[N - 1], q) + rho * Wp[N - 1]) / rho;
    const Mat WpN = (qcomm(G[N - 1], Wp[0], q) + rho * Wm[N - 1]) / rho;
    Mat sm = td.d[N] * WmN + td.eps_plus_N * Id, sp = td.d[N] * WpN + td.eps_minus_N * Id;
    Mat scale = td.eps_plus_N * Id, scalep = td.eps_minus_N * Id;
    for (std::size_t k = 0; k < N; ++k) {
      sm += td.d[k] * Wm[k];
      sp += td.d[k] * Wp[k];
      scale += td.d[k] * Wm[k];
      scalep += td.d[k] * Wp[k];
    }
    out.push_back({"truncation W_-", rel(sm, scale)});
    out.push_back({"truncation W_+", rel(sp, scalep)});
  }
  return out;
}

std::vector<Mat> i_modes(const ChainConfig& cfg, std::size_t K) {
  const AlternatingOps a = alternating_ops(cfg, K);
  const cplx q = cfg.q, q2 = q * q - 1.0 / (q * q);
  const KParams &p = cfg.boundary.left, &b = cfg.boundary.right;
  std::vector<Mat> out;
  for (std::size_t k = 0; k < K; ++k)
    out.push_back(b.eps_plus * a.W_minus[k] + b.eps_minus * a.W_plus[k] + b.k_minus / p.k_minus * a.G[k] / q2 +
                  b.k_plus / p.k_plus * a.Gtilde[k] / q2);
  return out;
}

cplx i0_scalar(const BoundaryParams& b, cplx q) {
  const KParams &p = b.left, &r = b.right;
  return b.rho(q) / ((q - 1.0 / q) * (q * q - 1.0 / (q * q))) * (r.k_plus / p.k_plus + r.k_minus / p.k_minus);
}

Mat psi_I(const ChainConfig& cfg, cplx u) {
  const TruncationData t = truncation_data(cfg);
  const std::vector<Mat> I = i_modes(cfg, cfg.N());
  Mat out = Mat::Zero(cfg.dim(), cfg.dim());
  for (std::size_t k = 0; k < cfg.N(); ++k) out += t.P[k].eval(u) * I[k];
  return out;
}

Mat transfer_from_modes(const ChainConfig& cfg, cplx u) {
  const cplx q = cfg.q, kap = q + 1.0 / q;
  const TruncationData t = truncation_data(cfg);
  const Mat Id = Mat::Identity(cfg.dim(), cfg.dim());
  const KParams& b = cfg.boundary.right;
  const cplx x = u * u * q + 1.0 / (u * u * q);
  const cplx scalar = b.eps_plus * (x * t.eps_plus_N + kap * t.eps_minus_N) +
                      b.eps_minus * (x * t.eps_minus_N + kap * t.eps_plus_N);
  Mat out = cfun(u * u) * cfun(u * u * q * q) * (psi_I(cfg, u) + t.h0.eval(u) * i0_scalar(cfg.boundary, q) * Id) +
            scalar * Id;
  for (std::size_t n = 0; n < cfg.N(); ++n) {
    const cplx a = u * qpow(q, 0.5 * cfg.two_js[n] + 0.5);
    out /= cfun(a * cfg.inhoms[n]) * cfun(a / cfg.inhoms[n]);
  }
  return out;
}

}  // namespace qtt
