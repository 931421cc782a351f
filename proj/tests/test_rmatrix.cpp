#include "doctest.h"
#include "helpers.hpp"
#include "qtt/printed.hpp"
#include "qtt/repspace.hpp"
#include "qtt/rmatrix.hpp"

using namespace qtt;

TEST_SUITE("rmatrix") {
  TEST_CASE("fundamental R against its displayed form") {
    test::Draw d(21);
    for (int i = 0; i < 3; ++i) {
      const cplx u = d();
      CHECK(rel_residual(r_fundamental(test::kQ).eval(u), r_half_printed(u, test::kQ)) < 1e-13);
      CHECK(rel_residual(r_fused(2, 2, test::kQ).eval(u), r_spin1_printed(u, test::kQ)) < 1e-13);
    }
  }

  TEST_CASE("closed form of R(1/2,j) agrees with the recursion") {
    for (int tj = 1; tj <= 4; ++tj)
      CHECK(residual(r_half_closed(tj, test::kQ), r_half_recursive(tj, test::kQ)) < 1e-12);
  }

  TEST_CASE("Yang-Baxter for mixed spins") {
    test::Draw d(22);
    for (auto [a, b, c] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {1, 2, 3}, {3, 1, 2}, {2, 2, 2}}) {
      const cplx u1 = d(), u2 = d();
      CHECK(ybe_residual(a, b, c, u1, u2, test::kQ) < 1e-10);
    }
  }

  TEST_CASE("R conserves the total weight") {
    // Independent of the fusion construction: entries vanish unless m1 + m2 is preserved.
    test::Draw d(23);
    const cplx u = d();
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        const Mat K = kron(spin_rep(a, test::kQ).qpow_s3(1.0), spin_rep(b, test::kQ).qpow_s3(1.0));
        const Mat R = r_fused(a, b, test::kQ).eval(u);
        CHECK(commutator_residual(K, R) < 1e-13);
      }
  }

  TEST_CASE("normalized R at u = 1 is the permutation") {
    for (int tj = 1; tj <= 3; ++tj) {
      const NormalizedRMatrix n = r_normalized(tj, tj, test::kQ);
      CHECK(n.remainder < 1e-10);
      CHECK(rel_residual(n.eval(1.0), permutation(tj)) < 1e-12);
    }
  }

  TEST_CASE("Lax operators divide exactly and satisfy RLL") {
    test::Draw d(24);
    for (int jn = 1; jn <= 3; ++jn)
      for (int j = 1; j <= 3; ++j) {
        CHECK(lax(jn, j, test::kQ).remainder < 1e-10);
        CHECK(rll_residual(jn, j, d(), d(), test::kQ) < 1e-10);
      }
    // The spin-1/2 Lax operator is also built directly from the generators.
    for (int jn = 1; jn <= 3; ++jn) {
      const LaxMatrix L = lax(jn, 1, test::kQ);
      const PolyMatrix D = lax_direct_half(jn, test::kQ);
      const cplx u = d();
      const Mat a = L.eval(u), b = D.eval(u);
      // Equal up to one overall scalar.
      const cplx s = (b.adjoint() * a).trace() / (b.adjoint() * b).trace();
      CHECK(rel_residual(a, s * b) < 1e-12);
    }
  }

  TEST_CASE("unitarity needs the sign (-1)^{4 j1 j2}") {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(unitarity_residual(a, b, test::kQ) < 1e-10);
        const double unsigned_res = unitarity_residual_printed(a, b, test::kQ);
        if ((a * b) % 2 == 1)
          CHECK(unsigned_res == doctest::Approx(2.0).epsilon(1e-9));
        else
          CHECK(unsigned_res < 1e-10);
      }
  }

  TEST_CASE("crossing and transposition symmetry") {
    for (int tj = 1; tj <= 3; ++tj) CHECK(crossing_residual(tj, test::kQ) < 1e-10);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) CHECK(symmetry_residual(a, b, test::kQ) < 1e-10);
  }

  TEST_CASE("negative control: wrong spectral parameter") {
    test::Draw d(25);
    const cplx u1 = d(), u2 = d();
    const std::vector<int> dims{2, 2, 2};
    const RMatrix R = r_fundamental(test::kQ);
    const Mat r12 = embed_pair(R.eval(u1 * u2), dims, 0, 1);
    const Mat r13 = embed_pair(R.eval(u1), dims, 0, 2);
    const Mat r23 = embed_pair(R.eval(u2), dims, 1, 2);
    CHECK(rel_residual(r12 * r13 * r23, r23 * r13 * r12) > 1e-4);
  }
}
