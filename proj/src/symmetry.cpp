#include "qtt/symmetry.hpp"

#include <algorithm>

#include "qtt/repspace.hpp"

namespace qtt {

namespace {

Mat pauli(int which) {
  Mat m = Mat::Zero(2, 2);
  if (which == 0) m(0, 1) = 1.0;  // sigma^+
  if (which == 1) m(1, 0) = 1.0;  // sigma^-
  if (which == 2) {               // sigma^z
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
  }
  return m;
}

double rel(const Mat& lhs, const Mat& scale) { return lhs.norm() / std::max(scale.norm(), 1e-300); }

const double kConstraintTol = 1e-12;

bool binomial_spectrum(const Vec& ev, const std::vector<cplx>& levels, std::size_t N, double* worst) {
  // Greedy multiset match: level n takes the binom(N, n) closest remaining eigenvalues.
  std::vector<cplx> pool(ev.data(), ev.data() + ev.size());
  double w = 0.0;
  double binom = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    const auto count = static_cast<std::size_t>(std::llround(binom));
    const cplx l = levels[n];
    for (std::size_t c = 0; c < count; ++c) {
      if (pool.empty()) {
        *worst = 1.0;
        return false;
      }
      auto it = std::min_element(pool.begin(), pool.end(),
                                 [&](cplx a, cplx b) { return std::abs(a - l) < std::abs(b - l); });
      w = std::max(w, std::abs(*it - l) / std::max(1.0, std::abs(l)));
      pool.erase(it);
    }
    binom = binom * static_cast<double>(N - n) / static_cast<double>(n + 1);
  }
  *worst = w;
  return pool.empty();
}

}  // namespace

ExchangeCase parse_exchange_case(const std::string& s) {
  if (s == "w0") return ExchangeCase::W0;
  if (s == "w1") return ExchangeCase::W1;
  if (s == "mixed") return ExchangeCase::Mixed;
  throw ConfigError("unknown exchange case: " + s);
}

BoundaryParams constrain(const BoundaryParams& b, ExchangeCase c, cplx q) {
  BoundaryParams out = b;
  const KParams& l = b.left;
  KParams& r = out.right;
  switch (c) {
    case ExchangeCase::W0:
      r.eps_minus = 0.0;
      r.k_plus = r.k_minus * l.k_plus / l.k_minus / (q * q);
      break;
    case ExchangeCase::W1:
      r.eps_plus = 0.0;
      r.k_minus = r.k_plus * l.k_minus / l.k_plus / (q * q);
      break;
    case ExchangeCase::Mixed:
      r.k_plus = r.k_minus = 0.0;
      break;
  }
  return out;
}

Mat i_mode(const AlternatingOps& ops, std::size_t k, const KParams& left, const KParams& r, cplx q) {
  const cplx q2 = q * q - 1.0 / (q * q);
  return r.eps_plus * ops.W_minus[k] + r.eps_minus * ops.W_plus[k] +
         (r.k_minus / left.k_minus * ops.G[k] + r.k_plus / left.k_plus * ops.Gtilde[k]) / q2;
}

SymmetryReport exchange_check(const ChainConfig& cfg, ExchangeCase c) {
  const cplx q = cfg.q;
  const KParams& l = cfg.boundary.left;
  const KParams& r = cfg.boundary.right;
  const BoundaryParams target = constrain(cfg.boundary, c, q);
  const KParams& t = target.right;
  if (std::abs(t.eps_plus - r.eps_plus) + std::abs(t.eps_minus - r.eps_minus) + std::abs(t.k_plus - r.k_plus) +
          std::abs(t.k_minus - r.k_minus) >
      kConstraintTol * (1.0 + std::abs(r.k_plus) + std::abs(r.k_minus)))
    throw ConstraintViolation("right-boundary parameters do not satisfy the exchange constraint");

  const std::size_t N = cfg.N();
  const AlternatingOps ops = alternating_ops(cfg, std::max<std::size_t>(N, 1));
  const Mat& W0 = ops.W_minus[0];
  const Mat& W1 = ops.W_plus[0];
  KParams primed = r, broken = r;
  Mat X;
  switch (c) {
    case ExchangeCase::W0:
      X = W0;
      primed.k_plus = r.k_plus * q * q;
      primed.k_minus = r.k_minus / (q * q);
      break;
    case ExchangeCase::W1:
      X = W1;
      primed.k_plus = r.k_plus / (q * q);
      primed.k_minus = r.k_minus * q * q;
      break;
    case ExchangeCase::Mixed:
      X = r.eps_plus * W0 + r.eps_minus * W1;
      break;
  }
  broken = primed;
  if (c == ExchangeCase::Mixed)
    broken.k_plus = 0.5;
  else
    broken.k_plus = primed.k_plus * 1.001;

  SymmetryReport rep;
  const std::size_t K = std::max<std::size_t>(N, 1);
  for (std::size_t k = 0; k < K; ++k) {
    const Mat lhs = X * i_mode(ops, k, l, r, q);
    const Mat rhs = i_mode(ops, k, l, primed, q) * X;
    const std::string id = "I" + std::to_string(2 * k + 1);
    rep.identities.push_back({"exchange " + id, rel(lhs - rhs, lhs)});
    if (c == ExchangeCase::Mixed) {
      const Mat lb = X * i_mode(ops, k, l, broken, q);
      rep.controls.push_back({"exchange " + id + " k-bar_+ != 0", rel(lb - i_mode(ops, k, l, broken, q) * X, lb)});
    } else {
      rep.controls.push_back({"exchange " + id + " perturbed k-bar_+", rel(lhs - i_mode(ops, k, l, broken, q) * X, lhs)});
    }
  }

  // Spin-1/2 Hamiltonian form on a homogeneous chain with the same left boundary.
  bool homogeneous = N >= 2;
  for (std::size_t n = 0; n < N; ++n) homogeneous = homogeneous && cfg.two_js[n] == 1 && cfg.inhoms[n] == 1.0;
  if (homogeneous && c != ExchangeCase::Mixed) {
    const HParams h = h_params(cfg.boundary);
    const cplx f = c == ExchangeCase::W0 ? q * q : 1.0 / (q * q);
    HParams hp = h;
    hp.hbar_plus = h.hbar_plus * f;
    hp.hbar_minus = h.hbar_minus / f;
    const Mat lhs = hxxz_param(N, hp, q) * X, rhs = X * hxxz_param(N, h, q);
    rep.identities.push_back({"Hamiltonian exchange", rel(lhs - rhs, lhs)});
    HParams hb = hp;
    hb.hbar_plus *= 1.001;
    rep.controls.push_back({"Hamiltonian exchange perturbed h-bar_+", rel(hxxz_param(N, hb, q) * X - rhs, lhs)});
  }
  return rep;
}

SymmetryReport hamiltonian_symmetry_check(int two_j, std::size_t N, const KParams& left, cplx eps_bar_plus,
                                          cplx eps_bar_minus, cplx q) {
  if (two_j != 1 && two_j != 2) throw DimensionMismatch("hamiltonian_symmetry_check: spin 1/2 or 1");
  const ChainConfig base = homogeneous_config(two_j, N, {left, {}}, q);
  const AlternatingOps ops = alternating_ops(base, N);
  const Mat& W0 = ops.W_minus[0];
  const Mat& W1 = ops.W_plus[0];
  const Mat Wmix = eps_bar_plus * W0 + eps_bar_minus * W1;

  auto ham = [&](const KParams& right) -> Mat {
    if (two_j == 1) return hxxz_param(N, h_params({left, right}), q);
    return hamiltonian(1, two_j, N, {left, right}, q).matrix;
  };
  SymmetryReport rep;
  const KParams minus{1.0, 0.0, 0.0, 0.0}, plus{0.0, 1.0, 0.0, 0.0}, star{eps_bar_plus, eps_bar_minus, 0.0, 0.0};
  rep.identities.push_back({"[H-, W0]", commutator_residual(ham(minus), W0)});
  rep.identities.push_back({"[H+, W1]", commutator_residual(ham(plus), W1)});
  rep.identities.push_back({"[H*, eps-bar W]", commutator_residual(ham(star), Wmix)});
  if (two_j == 2) {
    rep.identities.push_back({"[H- printed spin-1, W0]", commutator_residual(hxxz_spin1(N, {left, minus}, q), W0)});
    rep.identities.push_back({"[H+ printed spin-1, W1]", commutator_residual(hxxz_spin1(N, {left, plus}, q), W1)});
  }
  const KParams bad{1.0, 0.0, 0.5, 0.0};
  rep.controls.push_back({"[H-, W0] k-bar_+ != 0", commutator_residual(ham(bad), W0)});
  rep.controls.push_back({"[H+, W0]", commutator_residual(ham(plus), W0)});
  return rep;
}

SymmetryReport transfer_symmetry_check(const ChainConfig& cfg, const std::vector<cplx>& us, int max_two_j) {
  const KParams& r = cfg.boundary.right;
  if (r.k_plus != 0.0 || r.k_minus != 0.0) throw ConstraintViolation("transfer symmetry requires k-bar = 0");
  const AlternatingOps ops = alternating_ops(cfg, std::max<std::size_t>(cfg.N(), 1));
  const Mat X = r.eps_plus * ops.W_minus[0] + r.eps_minus * ops.W_plus[0];
  const Chain ch(cfg);
  SymmetryReport rep;
  for (int tj = 1; tj <= max_two_j; ++tj)
    for (std::size_t i = 0; i < us.size(); ++i)
      rep.identities.push_back({"[t(" + std::to_string(tj) + "/2, u" + std::to_string(i) + "), eps-bar W]",
                                commutator_residual(ch.transfer_tilde(tj, us[i]), X)});
  if (!us.empty()) {
    ChainConfig broken = cfg;
    broken.boundary.right.k_plus = 0.5;
    broken.boundary.right.k_minus = 0.4;
    const Chain cb(broken);
    rep.controls.push_back({"[t(1/2), eps-bar W] k-bar != 0", commutator_residual(cb.transfer_tilde(1, us[0]), X)});
  }
  return rep;
}

Mat w0_recursive(const std::vector<int>& two_js, const std::vector<cplx>& inhoms, const KParams& left, cplx q) {
  if (two_js.size() != inhoms.size()) throw DimensionMismatch("w0_recursive: spins and inhomogeneities differ");
  const cplx sq = qpow(q, 0.5);
  Mat W = left.eps_plus * Mat::Identity(1, 1);
  for (std::size_t n = 0; n < two_js.size(); ++n) {
    const SpinRep rep = spin_rep(two_js[n], q);
    const cplx v = inhoms[n];
    const Mat a = left.k_plus * v * sq * rep.splus * rep.qpow_s3(0.5) + left.k_minus / v / sq * rep.sminus * rep.qpow_s3(0.5);
    W = kron(a, Mat(Mat::Identity(W.rows(), W.cols()))) + kron(rep.qpow_s3(1.0), W);
  }
  return W;
}

SymmetryReport xxx_check(std::size_t N, const KParams& left, cplx hbar_minus) {
  if (N == 0) throw DimensionMismatch("xxx_check: N must be positive");
  const cplx ep = left.eps_plus, kp = left.k_plus, km = left.k_minus;
  const std::vector<int> spins(N, 1);
  const std::vector<cplx> ones(N, 1.0);
  const Mat W = w0_recursive(spins, ones, left, 1.0);
  const std::size_t D = static_cast<std::size_t>(W.rows());
  SymmetryReport rep;

  // Coproduct image eps_+ + sum_n (k_+ S^+_n + k_- S^-_n).
  Mat C = ep * Mat::Identity(W.rows(), W.cols());
  for (std::size_t n = 1; n <= N; ++n) C += kp * site_op(pauli(0), n, N) + km * site_op(pauli(1), n, N);
  rep.identities.push_back({"W0 coproduct image", rel(W - C, C)});

  const Vec ev = Eigen::ComplexEigenSolver<Mat>(W, false).eigenvalues();
  const cplx eta = kp / km;
  const cplx s_printed = std::sqrt(eta), s_product = std::sqrt(kp * km);
  std::vector<cplx> printed, product;
  for (std::size_t n = 0; n <= N; ++n) {
    const double m = static_cast<double>(N) - 2.0 * static_cast<double>(n);
    printed.push_back(m * s_printed + ep);
    product.push_back(m * s_product + ep);
  }
  double wp = 0.0, wq = 0.0;
  binomial_spectrum(ev, printed, N, &wp);
  binomial_spectrum(ev, product, N, &wq);
  rep.identities.push_back({"spectrum (N-2n) sqrt(k+/k-) + eps+ printed", wp});
  rep.identities.push_back({"spectrum (N-2n) sqrt(k+ k-) + eps+", wq});

  // Recursive eigenvectors built from sqrt(eta)|up> + |down> and -sqrt(eta)|up> + |down>.
  Vec plus(2), minus(2);
  plus << s_printed, 1.0;
  minus << -s_printed, 1.0;
  std::vector<std::vector<Vec>> level(2);
  level[0].push_back(plus);
  level[1].push_back(minus);
  for (std::size_t M = 1; M < N; ++M) {
    std::vector<std::vector<Vec>> next(M + 2);
    for (std::size_t n = 0; n <= M; ++n)
      for (const Vec& x : level[n]) {
        next[n].push_back(kron(Mat(plus), Mat(x)).col(0));
        next[n + 1].push_back(kron(Mat(minus), Mat(x)).col(0));
      }
    level = std::move(next);
  }
  double e_printed = 0.0, e_product = 0.0;
  std::size_t count = 0;
  for (std::size_t n = 0; n <= N; ++n)
    for (const Vec& x : level[n]) {
      const Vec Wx = W * x;
      e_printed = std::max(e_printed, (Wx - printed[n] * x).norm() / (std::abs(printed[n]) * x.norm()));
      e_product = std::max(e_product, (Wx - product[n] * x).norm() / (std::abs(product[n]) * x.norm()));
      ++count;
    }
  rep.identities.push_back({"recursive eigenvectors, printed eigenvalues", e_printed});
  rep.identities.push_back({"recursive eigenvectors, sqrt(k+ k-) eigenvalues", e_product});
  rep.values.push_back({"eigenvector count", static_cast<double>(count)});
  rep.values.push_back({"dimension", static_cast<double>(D)});

  const cplx s = left.eps_plus + left.eps_minus;
  HParams h{2.0 * kp / s, 2.0 * km / s, 0.0, 0.0, hbar_minus, 0.0};
  h.hbar_plus = hbar_minus * h.h_plus / h.h_minus;
  rep.identities.push_back({"[H_XXX, W0]", commutator_residual(hxxz_param(N, h, 1.0), W)});
  HParams hb = h;
  hb.hbar_plus += 0.5;
  rep.controls.push_back({"[H_XXX, W0] constraint violated", commutator_residual(hxxz_param(N, hb, 1.0), W)});
  return rep;
}

Mat blob_density(std::size_t N, std::size_t i, cplx q, bool printed) {
  if (i < 1 || i + 1 > N) throw DimensionMismatch("blob_density: site out of range");
  const cplx kap = q + 1.0 / q;
  const Mat sp = pauli(0), sm = pauli(1), sz = pauli(2);
  const std::size_t D = std::size_t{1} << N;
  const double s = printed ? 1.0 : -1.0;
  Mat e = -(site_op(sp, i, N) * site_op(sm, i + 1, N) + site_op(sm, i, N) * site_op(sp, i + 1, N) +
            kap / 4.0 * site_op(sz, i, N) * site_op(sz, i + 1, N)) +
          s * (q - 1.0 / q) / 4.0 * (site_op(sz, i + 1, N) - site_op(sz, i, N));
  if (!printed) e += kap / 4.0 * Mat::Identity(D, D);
  return e;
}

SymmetryReport blob_check(std::size_t N, const KParams& left, cplx q, bool printed) {
  if (N < 3) throw DimensionMismatch("blob_check: needs N >= 3");
  const ChainConfig cfg = homogeneous_config(1, N, {left, {}}, q);
  const AlternatingOps ops = alternating_ops(cfg, N);
  const Mat& W0 = ops.W_minus[0];
  const std::size_t D = cfg.dim();
  const cplx s = left.eps_plus + left.eps_minus;
  const HParams h{2.0 * left.k_plus / s, 2.0 * left.k_minus / s, (left.eps_plus - left.eps_minus) / s, 0.0, 0.0, 1.0};
  const Mat Hm = hxxz_param(N, h, q);

  std::vector<Mat> e;
  for (std::size_t i = 1; i < N; ++i) e.push_back(blob_density(N, i, q, printed));
  SymmetryReport rep;
  double tl = 0.0, sq = 0.0, cw = 0.0;
  // Least-squares delta from e_1^2 ~ delta e_1.
  const cplx delta = (e[0].adjoint() * (e[0] * e[0])).trace() / (e[0].adjoint() * e[0]).trace();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    tl = std::max(tl, rel(e[i] * e[i + 1] * e[i] - e[i], e[i]));
    tl = std::max(tl, rel(e[i + 1] * e[i] * e[i + 1] - e[i + 1], e[i + 1]));
  }
  for (const Mat& x : e) {
    sq = std::max(sq, rel(x * x - delta * x, x * x));
    cw = std::max(cw, commutator_residual(W0, x));
  }
  rep.identities.push_back({"TL e_i e_{i+-1} e_i = e_i", tl});
  rep.identities.push_back({"TL e_i^2 = delta e_i", sq});
  rep.identities.push_back({"[W0, e_i]", cw});
  rep.values.push_back({"delta", delta});

  Mat X = Hm;
  for (const Mat& x : e) X += 2.0 * x;
  Mat A = Mat::Zero(2, 2);
  for (std::size_t r = 0; r < D / 2; ++r) A += X.block(2 * r, 2 * r, 2, 2);
  A /= static_cast<double>(D / 2);
  const Mat Xb = kron(Mat(Mat::Identity(D / 2, D / 2)), A);
  rep.identities.push_back({"H- + 2 sum e_i acts on site 1 only", rel(X - Xb, X)});
  const Vec lam = Eigen::ComplexEigenSolver<Mat>(A, false).eigenvalues();
  const cplx mu = lam(0) - lam(1);
  if (std::abs(mu) <= 1e-12 * std::max(1.0, A.norm()))
    throw NoIdempotentScaling("site-1 boundary term has a degenerate spectrum");
  const Mat b2 = (A - lam(1) * Mat::Identity(2, 2)) / mu;
  const Mat b = kron(Mat(Mat::Identity(D / 2, D / 2)), b2);
  rep.identities.push_back({"b^2 = b", rel(b * b - b, b)});
  const cplx tr = e[0].trace();
  const cplx y = std::abs(tr) > 1e-12 ? (e[0] * b * e[0]).trace() / tr : cplx(0.0);
  rep.identities.push_back({"e_1 b e_1 = y e_1", rel(e[0] * b * e[0] - y * e[0], e[0] * b * e[0])});
  double far = 0.0;
  for (std::size_t i = 1; i < e.size(); ++i) far = std::max(far, commutator_residual(e[i], b));
  rep.identities.push_back({"[e_i, b] = 0 for i >= 2", far});
  rep.values.push_back({"mu", mu});
  rep.values.push_back({"y", y});
  rep.values.push_back({"scalar", lam(1)});
  const Mat& W1 = ops.W_plus[0];
  double cw1 = 0.0;
  for (const Mat& x : e) cw1 = std::max(cw1, commutator_residual(W1, x));
  rep.controls.push_back({"[W1, e_i]", cw1});
  return rep;
}

}  // namespace qtt
