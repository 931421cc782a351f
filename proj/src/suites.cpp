#include "qtt/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "qtt/alternating.hpp"
#include "qtt/config.hpp"
#include "qtt/conserved.hpp"
#include "qtt/intertwiners.hpp"
#include "qtt/printed.hpp"
#include "qtt/repspace.hpp"
#include "qtt/symmetry.hpp"

namespace qtt {

namespace {

double tol_or(const SuiteOptions& o, double def) { return o.tol > 0.0 ? o.tol : def; }

cplx q_of(const SuiteOptions& o) { return o.chain ? o.chain->q : default_q(); }

std::string spins_label(const std::vector<int>& two_js) {
  std::string s = "(";
  for (std::size_t i = 0; i < two_js.size(); ++i) s += (i ? "," : "") + format_spin(two_js[i]);
  return s + ")";
}

std::string num(std::size_t i) { return "#" + std::to_string(i); }

// Runs f and records any library error as a failed case; configuration and size errors propagate.
void guarded(Report& rep, const std::string& id, const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const DimensionGuard&) {
    throw;
  } catch (const std::exception& e) {
    rep.error(id, e.what());
  }
}

ChainConfig make_chain(const std::vector<int>& two_js, Sampler& s, bool random_inhoms = true) {
  ChainConfig c;
  c.two_js = two_js;
  for (std::size_t i = 0; i < two_js.size(); ++i) c.inhoms.push_back(random_inhoms ? s.draw() : cplx(1.0));
  c.boundary = s.boundary();
  c.validate();
  return c;
}

std::vector<ChainConfig> chains_or(const SuiteOptions& o, Sampler& s, const std::vector<std::vector<int>>& spins) {
  if (o.chain) return {*o.chain};
  std::vector<ChainConfig> out;
  for (const auto& sp : spins) out.push_back(make_chain(sp, s));
  return out;
}

void chain_values(Report& rep, const std::string& id, const ChainConfig& c) { rep.value(id, chain_config_to_json(c)); }

// ---------------------------------------------------------------- R-matrices

Report suite_ybe(const SuiteOptions& o) {
  Report rep("ybe");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-9);
  const int m = o.max_two_j;
  std::vector<std::pair<cplx, cplx>> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({s.draw(), s.draw()});
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c) {
        const std::string lab = "ybe " + spins_label({a, b, c});
        for (std::size_t i = 0; i < pts.size(); ++i)
          guarded(rep, lab + " " + num(i),
                  [&] { rep.below(lab + " " + num(i), ybe_residual(a, b, c, pts[i].first, pts[i].second, q), tol); });
      }
  for (int a = 1; a <= m; ++a) {
    guarded(rep, "crossing " + format_spin(a), [&] { rep.below("crossing " + format_spin(a), crossing_residual(a, q), tol); });
    for (int b = 1; b <= m; ++b) {
      const std::string lab = spins_label({a, b});
      guarded(rep, "unitarity " + lab, [&] {
        rep.below("unitarity " + lab, unitarity_residual(a, b, q), tol);
        rep.info("unitarity unsigned scalar " + lab, unitarity_residual_printed(a, b, q));
        rep.below("P R P = R^t-type symmetry " + lab, symmetry_residual(a, b, q), tol);
        rep.below("RLL " + lab, rll_residual(a, b, pts[0].first, pts[0].second, q), tol);
      });
    }
  }
  // Control: spectral parameters of R12 do not match u1/u2.
  guarded(rep, "control", [&] {
    const std::vector<int> dims{2, 3, 2};
    const cplx u1 = pts[0].first, u2 = pts[0].second;
    const Mat r12 = embed_pair(r_fused(1, 2, q).eval(u1 * u2), dims, 0, 1);
    const Mat r13 = embed_pair(r_fused(1, 1, q).eval(u1), dims, 0, 2);
    const Mat r23 = embed_pair(r_fused(2, 1, q).eval(u2), dims, 1, 2);
    rep.above("control ybe R12(u1 u2)", rel_residual(r12 * r13 * r23, r23 * r13 * r12), kControlThreshold);
  });
  return rep;
}

Report suite_regressions(const SuiteOptions& o) {
  Report rep("regressions");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-10);
  const KParams p = s.kparams();
  for (std::size_t i = 0; i < 2; ++i) {
    const cplx u = s.draw();
    guarded(rep, "printed " + num(i), [&] { rep.below("printed " + num(i), printed_regressions(p, u, q), tol); });
  }
  guarded(rep, "control", [&] {
    const cplx u = s.draw();
    rep.above("control R(1/2,1/2) at perturbed q", rel_residual(r_half_printed(u, q), r_fundamental(q * 1.001).eval(u)),
              kControlThreshold);
  });
  return rep;
}

Report suite_normalization(const SuiteOptions& o) {
  Report rep("normalization");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-10);
  const int m = o.max_two_j;
  const KParams p = s.kparams();
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      const std::string lab = spins_label({a, b});
      guarded(rep, "R~ remainder " + lab, [&] { rep.below("R~ remainder " + lab, r_normalized(a, b, q).remainder, tol); });
      guarded(rep, "Lax remainder " + lab, [&] { rep.below("Lax remainder " + lab, lax(a, b, q).remainder, tol); });
    }
    guarded(rep, "K~ remainder " + format_spin(a), [&] {
      double rem = 0.0;
      k_normalized(a, p, q, &rem);
      rep.below("K~ remainder " + format_spin(a), rem, tol);
    });
    guarded(rep, "R~(1) permutation " + format_spin(a), [&] {
      rep.below("R~(1) permutation " + format_spin(a), rel_residual(r_normalized(a, a, q).eval(1.0), permutation(a)), tol);
    });
  }
  guarded(rep, "control", [&] {
    double rem = 0.0;
    r_fused(2, 2, q).poly.exact_div(LaurentPoly::c_of(qpow(q, 0.3)), 1e300, &rem);
    rep.above("control R(1,1) divided by a non-factor", rem, kControlThreshold);
  });
  return rep;
}

// ---------------------------------------------------------------- fusion and K-matrices

Report suite_fusion(const SuiteOptions& o) {
  Report rep("fusion-maps");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-10);
  const KParams p = s.kparams(), bar = s.kparams();
  for (int tj = 1; tj <= std::max(4, o.max_two_j); ++tj) {
    const std::string lab = "j=" + format_spin(tj);
    guarded(rep, lab, [&] { rep.below(lab, fusion_relations(tj, q), tol); });
  }
  for (int tj = 1; tj <= o.max_two_j; ++tj) {
    const std::string lab = "j=" + format_spin(tj);
    guarded(rep, "intertwining " + lab, [&] {
      rep.below("intertwining " + lab, intertwining_check(tj, p, q), tol);
      double worst = 0.0;
      for (const auto& r : intertwining_check(tj, p, q, 1e-3)) worst = std::max(worst, r.residual);
      rep.above("control intertwining perturbed eps+ " + lab, worst, kControlThreshold);
    });
    if (tj >= 2)
      guarded(rep, "reduction " + lab, [&] {
        rep.below("reduction " + lab, reduction_residual(tj, p, q), tol);
        rep.below("dual reduction " + lab, dual_reduction_residual(tj, bar, q), tol);
      });
  }
  guarded(rep, "control", [&] {
    const SpinMaps a = spin_maps(2, q), b = spin_maps(2, q * 1.001);
    rep.above("control F(q) E(1.001 q) = I", rel_residual(a.F * b.E, Mat::Identity(3, 3)), kControlThreshold);
  });
  return rep;
}

KParams diagonal_of(KParams p) {
  p.k_plus = 0.0;
  p.k_minus = 0.0;
  return p;
}

Report suite_re(const SuiteOptions& o, bool dual) {
  Report rep(dual ? "dual-re" : "re");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-9);
  const int m = o.max_two_j;
  const KParams gen = s.kparams();
  const std::vector<std::pair<std::string, KParams>> params{{"generic", gen}, {"diagonal", diagonal_of(gen)}};
  std::vector<std::pair<cplx, cplx>> pts;
  for (int i = 0; i < 3; ++i) pts.push_back({s.draw(), s.draw()});
  auto res = [&](int a, int b, const KParams& p, cplx u, cplx v) {
    return dual ? dual_reflection_residual(a, b, p, u, v, q) : reflection_residual(a, b, p, u, v, q);
  };
  for (const auto& [pname, p] : params) {
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b) {
        const std::string lab = (dual ? "dual reflection " : "reflection ") + pname + " " + spins_label({a, b});
        for (std::size_t i = 0; i < pts.size(); ++i)
          guarded(rep, lab + " " + num(i),
                  [&] { rep.below(lab + " " + num(i), res(a, b, p, pts[i].first, pts[i].second), tol); });
      }
    guarded(rep, "gamma trace " + pname, [&] {
      rep.below("gamma trace " + pname, dual ? gamma_plus_trace_residual(p, q) : gamma_minus_trace_residual(p, q), tol);
    });
    if (!dual)
      for (int a = 1; a <= m; ++a)
        guarded(rep, "transpose symmetry " + pname, [&] {
          rep.below("transpose symmetry " + pname + " " + format_spin(a), transpose_symmetry_residual(a, p, q), tol);
        });
  }
  if (!dual) {
    // Dressed K-matrices on a mixed chain.
    const ChainConfig cfg = o.chain ? *o.chain : make_chain({1, 2}, s);
    chain_values(rep, "dressed chain", cfg);
    guarded(rep, "dressed reflection", [&] {
      const Chain ch(cfg);
      for (int a = 1; a <= std::min(m, 2); ++a)
        for (int b = 1; b <= std::min(m, 2); ++b)
          rep.below("dressed reflection " + spins_label({a, b}),
                    dressed_reflection_residual(ch, a, b, pts[0].first, pts[0].second), tol);
    });
  }
  // Control: the two K-matrices carry different boundary parameters.
  guarded(rep, "control", [&] {
    const KParams other = s.kparams();
    const cplx u = pts[0].first, v = pts[0].second;
    const RMatrix r = r_fused(1, 2, q);
    Mat k1, k2, a, b;
    if (dual) {
      k1 = kron(k_dual(1, gen, q).eval(u), Mat::Identity(3, 3));
      k2 = kron(Mat::Identity(2, 2), k_dual(2, other, q).eval(v));
      a = r.eval(v / u);
      b = r.eval(1.0 / (u * v * q * q));
    } else {
      k1 = kron(k_fused(1, gen, q).eval(u), Mat::Identity(3, 3));
      k2 = kron(Mat::Identity(2, 2), k_fused(2, other, q).eval(v));
      a = r.eval(u / v);
      b = r.eval(u * v);
    }
    rep.above("control mismatched boundary parameters", rel_residual(a * k1 * b * k2, k2 * b * k1 * a),
              kControlThreshold);
  });
  return rep;
}

// ---------------------------------------------------------------- chains

const std::vector<std::vector<int>> kQdetSpins{{1}, {2}, {1, 2}, {2, 1}, {1, 1, 2}, {2, 2, 1}};

Report suite_qdet(const SuiteOptions& o) {
  Report rep("qdet");
  Sampler s(o.seed);
  const double tol = tol_or(o, 1e-9);
  const auto cfgs = chains_or(o, s, kQdetSpins);
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    const std::string lab = "gamma " + spins_label(cfgs[c].two_js) + " " + num(c);
    chain_values(rep, lab, cfgs[c]);
    guarded(rep, lab, [&] {
      const Chain ch(cfgs[c]);
      const Mat I = Mat::Identity(ch.dim(), ch.dim());
      for (std::size_t i = 0; i < 3; ++i) {
        const cplx u = s.draw();
        rep.below(lab + " u" + std::to_string(i), rel_residual(ch.gamma_image(u), ch.gamma_expected(u) * I), tol);
      }
    });
  }
  guarded(rep, "control", [&] {
    ChainConfig bad = cfgs[0];
    bad.boundary.left.eps_plus *= 1.01;
    const Chain ch(cfgs[0]), cb(bad);
    const cplx u = s.draw();
    rep.above("control perturbed eps+ prediction",
              rel_residual(ch.gamma_image(u), cb.gamma_expected(u) * Mat::Identity(ch.dim(), ch.dim())),
              kControlThreshold);
  });
  return rep;
}

Report suite_tt(const SuiteOptions& o) {
  Report rep("tt");
  Sampler s(o.seed);
  const double tol = tol_or(o, 1e-8);
  std::vector<ChainConfig> cfgs;
  if (o.chain) {
    cfgs.push_back(*o.chain);
  } else {
    std::mt19937_64 g(o.seed ^ 0x5eedull);
    std::uniform_int_distribution<int> nd(1, 3), sd(1, 2);
    for (int d = 0; d < 5; ++d) {
      std::vector<int> sp(static_cast<std::size_t>(nd(g)));
      for (auto& x : sp) x = sd(g);
      cfgs.push_back(make_chain(sp, s));
    }
  }
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    const std::string lab = "draw " + num(c) + " " + spins_label(cfgs[c].two_js);
    chain_values(rep, lab, cfgs[c]);
    guarded(rep, lab, [&] {
      const Chain ch(cfgs[c]);
      const cplx u = s.draw();
      for (int tj : {2, 3, 4}) rep.below(lab + " TT j=" + format_spin(tj), tt_residual(ch, tj, u), tol);
    });
  }
  guarded(rep, "control", [&] {
    const Chain ch(cfgs[0]);
    const cplx q = cfgs[0].q, u = s.draw();
    const Mat lhs = ch.transfer(2, u);
    const Mat rhs = ch.transfer(1, u * qpow(q, -0.5)) * ch.transfer(1, u * qpow(q, 0.5));
    rep.above("control TT j=1 without the determinant term", rel_residual(lhs, rhs), kControlThreshold);
  });
  return rep;
}

Report suite_tsys(const SuiteOptions& o) {
  Report rep("tsys");
  Sampler s(o.seed);
  const double tol = tol_or(o, 1e-7);
  const auto cfgs = chains_or(o, s, {{1}, {2}, {1, 1}, {1, 2}});
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    const std::string lab = spins_label(cfgs[c].two_js) + " " + num(c);
    chain_values(rep, lab, cfgs[c]);
    guarded(rep, lab, [&] {
      const Chain ch(cfgs[c]);
      const cplx u = s.draw();
      for (int tj : {1, 2}) {
        rep.below("T-system " + lab + " j=" + format_spin(tj), tsystem_residual(ch, tj, u), tol);
        rep.below("Y-system " + lab + " j=" + format_spin(tj), ysystem_residual(ch, tj, u), tol);
      }
    });
  }
  guarded(rep, "control", [&] {
    const Chain ch(cfgs[0]);
    const cplx sq = qpow(cfgs[0].q, 0.5), u = s.draw();
    const Mat lhs = ch.transfer(1, u / sq) * ch.transfer(1, u * sq);
    rep.above("control T-system j=1/2 without g", rel_residual(lhs, ch.transfer(2, u)), kControlThreshold);
  });
  return rep;
}

Report suite_aq(const SuiteOptions& o) {
  Report rep("aq-relations");
  Sampler s(o.seed);
  const double tol = tol_or(o, 1e-9);
  const auto cfgs = chains_or(o, s, {{1}, {1, 1}, {1, 1, 1}, {2}, {1, 2}, {2, 1}});
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    const std::string lab = spins_label(cfgs[c].two_js) + " " + num(c);
    chain_values(rep, lab, cfgs[c]);
    guarded(rep, lab, [&] {
      rep.below(lab, aq_relations(cfgs[c], 2), tol);
      const Chain ch(cfgs[c]);
      const cplx u = s.draw();
      rep.below(lab + " t~(1/2) from modes", rel_residual(transfer_from_modes(cfgs[c], u), ch.transfer_tilde(1, u)), tol);
    });
  }
  guarded(rep, "control", [&] {
    const ChainConfig& c = cfgs[0];
    const cplx q = c.q, rho = c.boundary.left.rho(q);
    const AlternatingOps ops = alternating_ops(c, c.N() + 2);
    const Mat lhs = q * ops.W_minus[0] * ops.Gtilde[0] - ops.Gtilde[0] * ops.W_minus[0] / q;
    const Mat rhs = rho * ops.W_minus[1] - rho * ops.W_plus[0];
    rep.above("control qo2 with G~ in place of G", (lhs - rhs).norm() / lhs.norm(), kControlThreshold);
  });
  return rep;
}

Report suite_hamiltonian(const SuiteOptions& o) {
  Report rep("hamiltonian-i");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-8), tight = tol_or(o, 1e-9);
  const BoundaryParams b = o.chain ? o.chain->boundary : s.boundary();
  rep.value("boundary", {{"left", kparams_to_json(b.left)}, {"right", kparams_to_json(b.right)}});
  for (std::size_t N : {2, 3, 4}) {
    const std::string lab = "N=" + std::to_string(N);
    guarded(rep, "H1 spin-1/2 " + lab, [&] {
      const Mat H1 = hamiltonian(1, 1, N, b, q).matrix;
      const Mat Hx = hxxz_half(N, b, q);
      cplx sc = 0.0;
      rep.below("c(q)/2 H1 - H_XXZ mod identity " + lab, residual_mod_identity(cfun(q) / 2.0 * H1 - Hx, Hx, &sc), tight);
      rep.value("H1 identity offset " + lab, cplx_json(sc));
      rep.below("h-parametrized H_XXZ " + lab, rel_residual(hxxz_param(N, h_params(b), q), Hx), tight);
    });
  }
  guarded(rep, "spin-1 fit", [&] {
    const AffineFit f = affine_fit(hamiltonian(1, 2, 2, b, q).matrix, hxxz_spin1(2, b, q));
    rep.below("spin-1 affine fit N=2", f.residual, tol);
    rep.value("spin-1 fit alpha", cplx_json(f.alpha));
    rep.value("spin-1 fit beta", cplx_json(f.beta));
  });
  for (std::size_t N : {2, 3}) {
    const std::string lab = "N=" + std::to_string(N);
    guarded(rep, "I-operators " + lab, [&] {
      const ModeHamiltonianCheck m = h_via_I(N, b, q);
      for (const auto& r : m.residuals)
        rep.below(r.name + " " + lab, r.residual, r.name == "[H1,H2]" ? tight : tol);
      rep.value("H1 printed offset " + lab, cplx_json(m.h1_offset));
      rep.value("H2 printed offset " + lab, cplx_json(m.h2_offset));
    });
  }
  guarded(rep, "control", [&] {
    const ChainConfig cfg = homogeneous_config(1, 2, b, q);
    const Mat W0 = alternating_ops(cfg, 2).W_minus[0];
    rep.above("control [H1, W0] with generic right boundary",
              commutator_residual(hamiltonian(1, 1, 2, b, q).matrix, W0), kControlThreshold);
  });
  return rep;
}

Report suite_qonsager(const SuiteOptions& o) {
  Report rep("qonsager");
  Sampler s(o.seed);
  const double tol = tol_or(o, 1e-8), dtol = tol_or(o, 1e-10);
  const auto cfgs = chains_or(o, s, {{1}, {2}, {1, 1}, {1, 2}, {1, 1, 1}});
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    const ChainConfig& cfg = cfgs[c];
    const std::string lab = spins_label(cfg.two_js) + " " + num(c);
    chain_values(rep, lab, cfg);
    guarded(rep, "delta " + lab, [&] {
      const DeltaSeries ds = delta_series(cfg, 3);
      rep.below("delta_1 = 0 " + lab, std::abs(ds.delta[0]) / std::abs(delta_c(1, cfg.q)), dtol);
      rep.info("delta series nonnegative powers " + lab, ds.nonnegative_residual);
      rep.info("delta series odd powers " + lab, ds.odd_residual);
      if (cfg.N() == 1)
        rep.below("delta_2 printed " + lab, std::abs(ds.delta[1] - delta2_printed_one(cfg)) / std::abs(ds.delta[1]), dtol);
      if (cfg.N() == 2)
        rep.below("delta_2 printed " + lab, std::abs(ds.delta[1] - delta2_printed_two(cfg)) / std::abs(ds.delta[1]), dtol);
      for (std::size_t k = 0; k < ds.delta.size(); ++k) rep.value("delta_" + std::to_string(k + 1) + " " + lab, cplx_json(ds.delta[k]));
    });
    guarded(rep, "q-Onsager " + lab, [&] {
      rep.below("q-Onsager " + lab, qonsager_reconstruct(cfg), tol);
      rep.info("printed W-2 polynomial " + lab, w_minus2_printed_residual(cfg));
    });
  }
  guarded(rep, "control", [&] {
    const AlternatingOps ops = alternating_ops(cfgs[0], cfgs[0].N() + 1);
    rep.above("control G1 against G~1", rel_residual(ops.G[0], ops.Gtilde[0]), kControlThreshold);
  });
  return rep;
}

// ---------------------------------------------------------------- symmetries

void add_symmetry(Report& rep, const std::string& lab, const SymmetryReport& r, double tol) {
  rep.below(lab, r.identities, tol);
  rep.above(lab + " control", r.controls, kControlThreshold);
  for (const auto& [k, v] : r.values) rep.value(lab + " " + k, cplx_json(v));
}

Report suite_symmetry(const SuiteOptions& o) {
  Report rep("symmetry");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-9), ttol = tol_or(o, 1e-8);
  std::vector<ExchangeCase> cases;
  if (o.symmetry_case == "all")
    cases = {ExchangeCase::W0, ExchangeCase::W1, ExchangeCase::Mixed};
  else
    cases = {parse_exchange_case(o.symmetry_case)};
  const BoundaryParams b = s.boundary();
  for (ExchangeCase c : cases) {
    const std::string cname = c == ExchangeCase::W0 ? "w0" : c == ExchangeCase::W1 ? "w1" : "mixed";
    std::vector<ChainConfig> cfgs;
    if (o.chain) {
      cfgs.push_back(*o.chain);
    } else {
      for (std::size_t N : {2, 3}) {
        ChainConfig cfg = homogeneous_config(1, N, b, q);
        cfg.boundary = constrain(cfg.boundary, c, q);
        cfgs.push_back(cfg);
      }
      ChainConfig mixed = make_chain({1, 2}, s);
      mixed.boundary = constrain(mixed.boundary, c, q);
      cfgs.push_back(mixed);
    }
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
      const std::string lab = cname + " " + spins_label(cfgs[i].two_js) + " " + num(i);
      chain_values(rep, lab, cfgs[i]);
      guarded(rep, lab, [&] { add_symmetry(rep, lab, exchange_check(cfgs[i], c), tol); });
      if (c == ExchangeCase::Mixed && cfgs[i].N() == 2 && cfgs[i].two_js[0] != cfgs[i].two_js[1]) {
        const std::vector<cplx> us = s.draws(3);
        guarded(rep, lab + " transfer", [&] {
          add_symmetry(rep, lab + " transfer", transfer_symmetry_check(cfgs[i], us, 3), ttol);
        });
      }
    }
  }
  if (!o.chain) {
    for (int tj : {1, 2})
      for (std::size_t N : {2, 3}) {
        const std::string lab = "Hamiltonians spin " + format_spin(tj) + " N=" + std::to_string(N);
        const cplx ebp = s.draw(), ebm = s.draw();
        guarded(rep, lab, [&] { add_symmetry(rep, lab, hamiltonian_symmetry_check(tj, N, b.left, ebp, ebm, q), tol); });
      }
  }
  return rep;
}

Report suite_xxx(const SuiteOptions& o) {
  Report rep("xxx");
  Sampler s(o.seed);
  const double tol = tol_or(o, 1e-10);
  const KParams left = o.chain ? o.chain->boundary.left : s.kparams();
  const cplx hbm = o.chain ? o.chain->boundary.right.eps_minus : s.draw();
  rep.value("left", kparams_to_json(left));
  rep.value("hbar_minus", cplx_json(hbm));
  for (std::size_t N = 1; N <= 4; ++N) {
    const std::string lab = "N=" + std::to_string(N);
    guarded(rep, lab, [&] { add_symmetry(rep, lab, xxx_check(N, left, hbm), tol); });
  }
  return rep;
}

Report suite_blob(const SuiteOptions& o) {
  Report rep("blob");
  Sampler s(o.seed);
  const cplx q = q_of(o);
  const double tol = tol_or(o, 1e-9);
  const KParams left = o.chain ? o.chain->boundary.left : s.kparams();
  rep.value("left", kparams_to_json(left));
  guarded(rep, "printed", [&] {
    const SymmetryReport r = blob_check(3, left, q, true);
    rep.below("printed densities", r.identities, tol);
    for (const auto& c : r.controls) rep.info("printed densities " + c.name, c.residual);
    for (const auto& [k, v] : r.values) rep.value("printed " + k, cplx_json(v));
  });
  guarded(rep, "corrected", [&] { add_symmetry(rep, "corrected densities", blob_check(3, left, q, false), tol); });
  return rep;
}

using SuiteFn = Report (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"ybe", suite_ybe},
      {"regressions", suite_regressions},
      {"fusion-maps", suite_fusion},
      {"re", [](const SuiteOptions& o) { return suite_re(o, false); }},
      {"dual-re", [](const SuiteOptions& o) { return suite_re(o, true); }},
      {"normalization", suite_normalization},
      {"qdet", suite_qdet},
      {"tt", suite_tt},
      {"tsys", suite_tsys},
      {"aq-relations", suite_aq},
      {"hamiltonian-i", suite_hamiltonian},
      {"qonsager", suite_qonsager},
      {"symmetry", suite_symmetry},
      {"xxx", suite_xxx},
      {"blob", suite_blob},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw ConfigError("unknown suite '" + name + "'");
  if (opt.max_two_j < 1) throw ConfigError("--max-spin must be at least 1/2");
  if (opt.chain) opt.chain->validate();
  return it->second(opt);
}

}  // namespace qtt
