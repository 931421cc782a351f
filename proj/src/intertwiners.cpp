#include "qtt/intertwiners.hpp"

#include "qtt/repspace.hpp"
#include "qtt/rmatrix.hpp"

namespace qtt {

SpinMaps spin_maps(int two_j, cplx q) {
  if (two_j < 1) throw std::invalid_argument("spin_maps: need j >= 1/2");
  const int n2 = two_j;
  auto B = [&](int a, int b) { return b_coef(a, b, q); };
  SpinMaps m;
  m.two_j = two_j;
  Mat E = Mat::Zero(2 * n2, n2 + 1);
  E(0, 0) = 1.0;
  for (int n = 1; n < n2; ++n) {
    cplx v = 1.0;
    for (int p = 0; p < n; ++p) v *= B(n2 - 1, n2 - 2 * p - 1) / B(n2, n2 - 2 * p);
    E(n, n) = v;
  }
  for (int k = 1; k <= n2; ++k) E(n2 + k - 1, k) = qnum(k, q) * E(k - 1, k - 1) / B(n2, n2 + 2 - 2 * k);

  Mat F = Mat::Zero(n2 + 1, 2 * n2);
  F(0, 0) = 1.0;
  for (int n = 2; n <= n2; ++n) {
    const cplx a = E(n - 1, n - 1), b = E(n + n2 - 2, n - 1);
    F(n - 1, n + n2 - 2) = b / (a * a + b * b);
    F(n - 1, n - 1) = (1.0 - F(n - 1, n + n2 - 2) * b) / a;
  }
  F(n2, 2 * n2 - 1) = 1.0 / E(2 * n2 - 1, n2);

  Mat H = Mat::Zero(n2 + 1, n2 + 1);
  cplx edge = 1.0, mid = 1.0;
  for (int k = 2; k <= n2; ++k) edge *= cfun(qpow(q, k));
  for (int k = 1; k < n2; ++k) mid *= cfun(qpow(q, k));
  H(0, 0) = edge;
  H(n2, n2) = edge;
  for (int n = 2; n <= n2; ++n)
    H(n - 1, n - 1) = B(n2 - 1, 2 * n - n2 - 1) / (E(n - 1, n - 1) * F(n - 1, n + n2 - 2)) * mid;
  m.E = E;
  m.F = F;
  m.H = H;
  return m;
}

BarMaps bar_maps(int two_label, cplx q) {
  if (two_label < 0) throw std::invalid_argument("bar_maps: negative label");
  const int n2 = two_label + 1;
  auto B = [&](int a, int b) { return b_coef(a, b, q); };
  BarMaps m;
  m.two_label = two_label;
  Mat Eb = Mat::Zero(2 * n2 + 2, n2);
  Eb(1, 0) = 1.0;
  for (int n = 1; n < n2; ++n) {
    cplx v = 1.0;
    for (int p = 0; p < n; ++p) v *= B(n2, n2 - 2 * p - 2) / B(n2 - 1, n2 - 1 - 2 * p);
    Eb(1 + n, n) = v;
  }
  for (int k = 0; k < n2; ++k) Eb(n2 + 1 + k, k) = qnum(k - n2, q) / B(n2, n2 - 2 * k) * Eb(1 + k, k);

  Mat Fb = Mat::Zero(n2, 2 * n2 + 2);
  for (int n = 1; n <= n2; ++n) {
    const cplx a = Eb(n, n - 1), b = Eb(n + n2, n - 1);
    Fb(n - 1, n + n2) = b / (a * a + b * b);
    Fb(n - 1, n) = (1.0 - Fb(n - 1, n + n2) * b) / a;
  }

  Mat Hb = Mat::Zero(n2, n2);
  cplx pre = q - 1.0 / q;
  for (int k = 0; k <= n2 - 2; ++k) pre *= cfun(qpow(q, -k - 1));
  for (int n = 1; n <= n2; ++n) Hb(n - 1, n - 1) = pre * B(n2, 2 * n - n2) / (Eb(n + n2, n - 1) * Fb(n - 1, n));
  m.Ebar = Eb;
  m.Fbar = Fb;
  m.Hbar = Hb;
  return m;
}

FusionMaps build_fusion_maps(int two_j, cplx q) {
  FusionMaps f;
  f.spin = spin_maps(two_j, q);
  f.bar = bar_maps(two_j - 1, q);
  // H is given in closed form; the decomposition of R at u = q^j must reproduce it.
  const Mat R = r_half_j(two_j - 1, q).eval(qpow(q, 0.5 * two_j));
  if (rel_residual(R, f.spin.E * f.spin.H * f.spin.F) > 1e-9)
    throw FusionMismatch("build_fusion_maps: H inconsistent with R(q^j) = E H F");
  return f;
}

double bar_scalar_identity(int two_label, cplx q) {
  const BarMaps b = bar_maps(two_label, q);
  cplx expect = (q - 1.0 / q) * (q - 1.0 / q);
  for (int k = 2; k <= two_label; ++k) expect *= cfun(qpow(q, -k));
  const cplx got = b.Fbar(0, 1) * b.Hbar(0, 0);
  return std::abs(got - expect) / std::abs(expect);
}

std::vector<NamedResidual> fusion_relations(int two_j, cplx q) {
  std::vector<NamedResidual> out;
  const SpinMaps s = spin_maps(two_j, q);
  const BarMaps b = bar_maps(two_j - 1, q);
  const SpinMaps up = spin_maps(two_j + 1, q);
  const BarMaps bj = bar_maps(two_j, q);
  const Mat Rq = r_half_j(two_j - 1, q).eval(qpow(q, 0.5 * two_j));
  const Mat Rbar = r_half_j(two_j, q).eval(qpow(q, -0.5 * two_j - 0.5));
  const cplx H1 = s.H(0, 0);
  auto I = [](Eigen::Index n) { return Mat(Mat::Identity(n, n)); };

  out.push_back({"FE=I", rel_residual(s.F * s.E, I(s.E.cols()))});
  out.push_back({"FbarEbar=I", rel_residual(b.Fbar * b.Ebar, I(b.Ebar.cols()))});
  out.push_back({"decompR", rel_residual(Rq, s.E * s.H * s.F)});
  out.push_back({"decompbarR", rel_residual(Rbar, b.Ebar * b.Hbar * b.Fbar)});
  out.push_back({"usefulEFH:EH=RE", rel_residual(s.E * s.H, Rq * s.E)});
  out.push_back({"usefulEFH:HF=FR", rel_residual(s.H * s.F, s.F * Rq)});
  out.push_back({"usefulEFH:R=EFR", rel_residual(Rq, s.E * s.F * Rq)});
  out.push_back({"usefulbarEFH:EH=RE", rel_residual(b.Ebar * b.Hbar, Rbar * b.Ebar)});
  out.push_back({"usefulbarEFH:HF=FR", rel_residual(b.Hbar * b.Fbar, b.Fbar * Rbar)});
  out.push_back({"usefulbarEFH:R=EFR", rel_residual(Rbar, b.Ebar * b.Fbar * Rbar)});
  out.push_back({"rel1:H1E=FtH", rel_residual(H1 * s.E, s.F.transpose() * s.H)});
  out.push_back({"rel1:EbarFbar+E'F'=I", rel_residual(b.Ebar * b.Fbar + up.E * up.F, I(2 * two_j + 2))});
  out.push_back({"rel2:FtFR=H1EF", rel_residual(s.F.transpose() * s.F * Rq, H1 * s.E * s.F)});
  out.push_back({"rel2:H1EEt=R", rel_residual(H1 * s.E * s.E.transpose(), Rq)});
  out.push_back({"rel2p1:F12H1Ebar=FbartHbar",
                 rel_residual(bj.Fbar(0, 1) * bj.Hbar(0, 0) * bj.Ebar, bj.Fbar.transpose() * bj.Hbar)});
  if (two_j >= 2) {
    const BarMaps bm = bar_maps(two_j - 2, q);
    const Mat Rm = r_half_j(two_j - 1, q).eval(qpow(q, -0.5 * two_j));
    const cplx sc = bm.Fbar(0, 1) * bm.Hbar(0, 0);
    out.push_back({"rel2p1:F12H1EbarEbart=R", rel_residual(sc * bm.Ebar * bm.Ebar.transpose(), Rm)});
    out.push_back({"rel2p1:FbartFbarR=F12H1EbarFbar",
                   rel_residual(bm.Fbar.transpose() * bm.Fbar * Rm, sc * bm.Ebar * bm.Fbar)});
  }
  out.push_back({"scalar:F12barH1bar", bar_scalar_identity(two_j, q)});
  return out;
}

}  // namespace qtt
