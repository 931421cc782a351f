#include "doctest.h"
#include "helpers.hpp"
#include "qtt/kmatrix.hpp"
#include "qtt/printed.hpp"
#include "qtt/rmatrix.hpp"

using namespace qtt;

TEST_SUITE("kmatrix") {
  TEST_CASE("displayed K-matrices") {
    test::Draw d(31);
    const KParams p = d.kparams();
    for (int i = 0; i < 3; ++i) {
      const cplx u = d();
      CHECK(rel_residual(k_fused(1, p, test::kQ).eval(u), k_half_printed(p, u, test::kQ)) < 1e-13);
      CHECK(rel_residual(k_fused(2, p, test::kQ).eval(u), k_spin1_printed(p, u, test::kQ)) < 1e-13);
    }
  }

  TEST_CASE("values at u = 1") {
    test::Draw d(32);
    const KParams p = d.kparams();
    const cplx q = test::kQ;
    const Mat kh = k_fused(1, p, q).eval(1.0);
    CHECK(rel_residual(kh, (p.eps_plus + p.eps_minus) * Mat::Identity(2, 2)) < 1e-14);
    // The spin-1 value includes the -k_+ k_- term.
    const cplx s = cfun(q) * (p.eps_plus * p.eps_plus + p.eps_minus * p.eps_minus +
                              p.eps_plus * p.eps_minus * (q + 1.0 / q) - p.k_plus * p.k_minus);
    CHECK(rel_residual(k_fused(2, p, q).eval(1.0), s * Mat::Identity(3, 3)) < 1e-13);
    const cplx without = s + cfun(q) * p.k_plus * p.k_minus;
    CHECK(rel_residual(k_fused(2, p, q).eval(1.0), without * Mat::Identity(3, 3)) > 1e-3);
  }

  TEST_CASE("reflection equations, generic and diagonal") {
    test::Draw d(33);
    KParams p = d.kparams();
    for (int pass = 0; pass < 2; ++pass) {
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          const cplx u = d(), v = d();
          CHECK(reflection_residual(a, b, p, u, v, test::kQ) < 1e-10);
          CHECK(dual_reflection_residual(a, b, p, u, v, test::kQ) < 1e-10);
        }
      p.k_plus = 0.0;
      p.k_minus = 0.0;
    }
  }

  TEST_CASE("dual K from the recursion") {
    test::Draw d(34);
    const KParams bar = d.kparams();
    for (int tj = 1; tj <= 3; ++tj) {
      const cplx u = d();
      CHECK(rel_residual(k_dual(tj, bar, test::kQ).eval(u), k_dual_recursive(tj, bar, u, test::kQ)) < 1e-11);
    }
  }

  TEST_CASE("normalized K divides exactly") {
    test::Draw d(35);
    const KParams p = d.kparams();
    for (int tj = 1; tj <= 4; ++tj) {
      double rem = 1.0;
      const KMatrix kt = k_normalized(tj, p, test::kQ, &rem);
      CHECK(rem < 1e-10);
      const cplx u = d();
      const Mat back = kt.eval(u) * k_tilde_divisor(tj, test::kQ).eval(u);
      CHECK(rel_residual(back, k_fused(tj, p, test::kQ).eval(u)) < 1e-12);
    }
  }

  TEST_CASE("intertwining relations and their control") {
    test::Draw d(36);
    const KParams p = d.kparams();
    for (int tj = 1; tj <= 3; ++tj) {
      for (const auto& r : intertwining_check(tj, p, test::kQ)) CHECK(r.residual < 1e-10);
      double worst = 0.0;
      for (const auto& r : intertwining_check(tj, p, test::kQ, 1e-3)) worst = std::max(worst, r.residual);
      CHECK(worst > 1e-4);
    }
  }

  TEST_CASE("transposition, reduction and gamma traces") {
    test::Draw d(37);
    const KParams p = d.kparams(), bar = d.kparams();
    for (int tj = 1; tj <= 3; ++tj) CHECK(transpose_symmetry_residual(tj, p, test::kQ) < 1e-12);
    for (int tj = 2; tj <= 3; ++tj) {
      CHECK(reduction_residual(tj, p, test::kQ) < 1e-10);
      CHECK(dual_reduction_residual(tj, bar, test::kQ) < 1e-10);
    }
    CHECK(gamma_minus_trace_residual(p, test::kQ) < 1e-12);
    CHECK(gamma_plus_trace_residual(bar, test::kQ) < 1e-12);
  }

  TEST_CASE("negative control: K-matrices with different parameters") {
    test::Draw d(38);
    const KParams p = d.kparams(), o = d.kparams();
    const cplx u = d(), v = d(), q = test::kQ;
    const RMatrix r = r_fused(1, 1, q);
    const Mat k1 = kron(k_fused(1, p, q).eval(u), Mat::Identity(2, 2));
    const Mat k2 = kron(Mat::Identity(2, 2), k_fused(1, o, q).eval(v));
    const Mat a = r.eval(u / v), b = r.eval(u * v);
    CHECK(rel_residual(a * k1 * b * k2, k2 * b * k1 * a) > 1e-4);
  }
}
