#include "qtt/printed.hpp"

namespace qtt {

namespace {

// max_ij |a_ij - b_ij| / max_ij |b_ij|
double entrywise(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1.0;
  return (a - b).cwiseAbs().maxCoeff() / std::max(b.cwiseAbs().maxCoeff(), 1e-300);
}

}  // namespace

Mat r_half_printed(cplx u, cplx q) {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(3, 3) = cfun(u * q);
  m(1, 1) = m(2, 2) = cfun(u);
  m(1, 2) = m(2, 1) = cfun(q);
  return m;
}

Mat r_spin1_printed(cplx u, cplx q) {
  const cplx a1 = cfun(u * q * q), a2 = cfun(u), a3 = cfun(q * q), a4 = cfun(u) * cfun(u / q) / cfun(u * q),
             a5 = cfun(q * q) * cfun(u) / cfun(u * q), a6 = cfun(q) * cfun(q * q) / cfun(u * q), a7 = a6 + a2;
  Mat m = Mat::Zero(9, 9);
  m(0, 0) = m(8, 8) = a1;
  m(1, 1) = m(3, 3) = m(5, 5) = m(7, 7) = a2;
  m(1, 3) = m(3, 1) = m(5, 7) = m(7, 5) = a3;
  m(2, 2) = m(6, 6) = a4;
  m(2, 4) = m(4, 2) = m(4, 6) = m(6, 4) = a5;
  m(2, 6) = m(6, 2) = a6;
  m(4, 4) = a7;
  return cfun(u) * cfun(u * q) * cfun(u * q) * m;
}

Mat k_half_printed(const KParams& p, cplx u, cplx q) {
  Mat m(2, 2);
  const cplx s = (u * u - 1.0 / (u * u)) / (q - 1.0 / q);
  m << u * p.eps_plus + p.eps_minus / u, p.k_plus * s, p.k_minus * s, u * p.eps_minus + p.eps_plus / u;
  return m;
}

SpinMaps spin_maps_printed(int two_j, cplx q) {
  const cplx b2 = qnum(2, q), b3 = qnum(3, q), r2 = std::sqrt(b2), r3 = std::sqrt(b3), r22 = std::sqrt(b2 * b2);
  SpinMaps s;
  s.two_j = two_j;
  if (two_j == 2) {
    s.E = Mat::Zero(4, 3);
    s.E(0, 0) = 1.0;
    s.E(1, 1) = s.E(2, 1) = 1.0 / r2;
    s.E(3, 2) = 1.0;
    s.H = Mat::Zero(3, 3);
    s.H(0, 0) = s.H(2, 2) = q * q - 1.0 / (q * q);
    s.H(1, 1) = 2.0 * (q - 1.0 / q);
    s.F = Mat::Zero(3, 4);
    s.F(0, 0) = 1.0;
    s.F(1, 1) = s.F(1, 2) = r2 / 2.0;
    s.F(2, 3) = 1.0;
    return s;
  }
  if (two_j == 3) {
    s.E = Mat::Zero(6, 4);
    s.E(0, 0) = 1.0;
    s.E(1, 1) = r2 / r3;
    s.E(2, 2) = b2 / (r22 * r3);
    s.E(3, 1) = 1.0 / r3;
    s.E(4, 2) = std::pow(b2, 1.5) / (r22 * r3);
    s.E(5, 3) = b2 / r22;
    s.F = Mat::Zero(4, 6);
    s.F(0, 0) = 1.0;
    s.F(1, 1) = r2 * r3 / (1.0 + b2);
    s.F(1, 3) = r3 / (1.0 + b2);
    s.F(2, 2) = r3 * r22 / (b2 * (1.0 + b2));
    s.F(2, 4) = r3 * r22 / (r2 * (1.0 + b2));
    s.F(3, 5) = r22 / b2;
    s.H = Mat::Zero(4, 4);
    s.H(0, 0) = s.H(3, 3) = std::pow(q, 5) - q - 1.0 / q + std::pow(q, -5);
    s.H(1, 1) = s.H(2, 2) = (q - 1.0 / q) * (q - 1.0 / q) * b2 * (1.0 + b2);
    return s;
  }
  throw DimensionMismatch("spin_maps_printed: only spins 1 and 3/2 are displayed");
}

BarMaps bar_maps_printed(int two_label, cplx q) {
  const cplx b2 = qnum(2, q), r2 = std::sqrt(b2);
  BarMaps b;
  b.two_label = two_label;
  if (two_label == 0) {
    b.Ebar = Mat::Zero(4, 1);
    b.Ebar(1, 0) = 1.0;
    b.Ebar(2, 0) = -1.0;
    b.Hbar = Mat::Constant(1, 1, 2.0 * (1.0 / q - q));
    b.Fbar = Mat::Zero(1, 4);
    b.Fbar(0, 1) = 0.5;
    b.Fbar(0, 2) = -0.5;
    return b;
  }
  if (two_label == 1) {
    b.Ebar = Mat::Zero(6, 2);
    b.Ebar(1, 0) = 1.0;
    b.Ebar(2, 1) = r2;
    b.Ebar(3, 0) = -r2;
    b.Ebar(4, 1) = -1.0;
    b.Hbar = (q - 1.0 / q) * (q - 1.0 / q) * (1.0 + b2) * Mat::Identity(2, 2);
    b.Fbar = Mat::Zero(2, 6);
    b.Fbar(0, 1) = 1.0 / (1.0 + b2);
    b.Fbar(0, 3) = -r2 / (1.0 + b2);
    b.Fbar(1, 2) = r2 / (1.0 + b2);
    b.Fbar(1, 4) = -1.0 / (1.0 + b2);
    return b;
  }
  throw DimensionMismatch("bar_maps_printed: only labels 0 and 1/2 are displayed");
}

std::vector<NamedResidual> printed_regressions(const KParams& p, cplx u, cplx q) {
  std::vector<NamedResidual> out;
  out.push_back({"R(1/2,1/2)", entrywise(r_fused(1, 1, q).eval(u), r_half_printed(u, q))});
  out.push_back({"R(1,1)", entrywise(r_fused(2, 2, q).eval(u), r_spin1_printed(u, q))});
  out.push_back({"K(1/2)", entrywise(k_fused(1, p, q).eval(u), k_half_printed(p, u, q))});
  out.push_back({"K(1)", entrywise(k_fused(2, p, q).eval(u), k_spin1_printed(p, u, q))});
  for (int tj : {2, 3}) {
    const SpinMaps a = spin_maps(tj, q), b = spin_maps_printed(tj, q);
    const std::string s = tj == 2 ? "1" : "3/2";
    out.push_back({"E(" + s + ")", entrywise(a.E, b.E)});
    out.push_back({"H(" + s + ")", entrywise(a.H, b.H)});
    out.push_back({"F(" + s + ")", entrywise(a.F, b.F)});
  }
  for (int tl : {0, 1}) {
    const BarMaps a = bar_maps(tl, q), b = bar_maps_printed(tl, q);
    const std::string s = tl == 0 ? "0" : "1/2";
    out.push_back({"Ebar(" + s + ")", entrywise(a.Ebar, b.Ebar)});
    out.push_back({"Hbar(" + s + ")", entrywise(a.Hbar, b.Hbar)});
    out.push_back({"Fbar(" + s + ")", entrywise(a.Fbar, b.Fbar)});
  }
  return out;
}

}  // namespace qtt
