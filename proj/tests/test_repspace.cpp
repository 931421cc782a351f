#include "doctest.h"
#include "helpers.hpp"
#include "qtt/repspace.hpp"

using namespace qtt;

TEST_SUITE("repspace") {
  TEST_CASE("U_q sl2 relations in every spin") {
    const cplx q = test::kQ;
    for (int tj = 1; tj <= 4; ++tj) {
      const SpinRep s = spin_rep(tj, q);
      const Mat K = s.qpow_s3(1.0), Ki = s.qpow_s3(-1.0);
      const Mat c = s.splus * s.sminus - s.sminus * s.splus;
      CHECK(rel_residual(c, (K - Ki) / (q - 1.0 / q)) < 1e-13);
      CHECK(rel_residual(K * s.splus * Ki, q * q * s.splus) < 1e-13);
      CHECK(rel_residual(K * s.sminus * Ki, s.sminus / (q * q)) < 1e-13);
      CHECK(s.s3.front() == tj);
      CHECK(s.s3.back() == -tj);
    }
  }

  TEST_CASE("q = 1 gives the sl2 Casimir") {
    for (int tj = 1; tj <= 3; ++tj) {
      const SpinRep s = spin_rep(tj, 1.0);
      const Mat h = s.s3_matrix() / 2.0;
      const Mat cas = h * h + 0.5 * (s.splus * s.sminus + s.sminus * s.splus);
      const double j = 0.5 * tj;
      CHECK(rel_residual(cas, j * (j + 1) * Mat::Identity(tj + 1, tj + 1)) < 1e-14);
    }
  }

  TEST_CASE("site layout puts site 1 rightmost") {
    const SiteLayout L = SiteLayout::from_spins({1, 2, 3});
    CHECK(L.dims == std::vector<int>{4, 3, 2});
    CHECK(L.total() == 24);
    CHECK(L.position(1) == 2);
    CHECK(L.position(3) == 0);
    Mat op = Mat::Zero(2, 2);
    op(0, 1) = 1.0;
    const Mat e = embed_site(op, 1, L);
    CHECK(rel_residual(e, kron(Mat::Identity(12, 12), op)) == 0.0);
  }

  TEST_CASE("permutation and pair embedding") {
    test::Draw d(11);
    Mat a(2, 2), b(3, 3);
    for (int i = 0; i < 4; ++i) a(i / 2, i % 2) = d();
    for (int i = 0; i < 9; ++i) b(i / 3, i % 3) = d();
    const Mat P = swap_matrix(2, 3);
    CHECK(rel_residual(P * kron(a, b) * P.transpose(), kron(b, a)) < 1e-15);
    CHECK(rel_residual(permutation(2) * permutation(2), Mat::Identity(9, 9)) == 0.0);
    // (a x b) on slots (0, 2) of 2 x 4 x 3
    const Mat e = embed_pair(kron(a, b), std::vector<int>{2, 4, 3}, 0, 2);
    const Mat ref = kron(kron(a, Mat::Identity(4, 4)), b);
    CHECK(rel_residual(e, ref) < 1e-15);
    const Mat e2 = embed_pair(kron(b, a), std::vector<int>{2, 4, 3}, 2, 0);
    CHECK(rel_residual(e2, ref) < 1e-15);
  }

  TEST_CASE("partial trace over the auxiliary factor") {
    test::Draw d(12);
    Mat a(3, 3), b(2, 2);
    for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = d();
    for (int i = 0; i < 4; ++i) b(i / 2, i % 2) = d();
    CHECK(rel_residual(partial_trace_aux(kron(a, b), 2), b.trace() * a) < 1e-14);
  }

  TEST_CASE("b coefficients") {
    const cplx q = test::kQ;
    // B_{j,j'}^2 = [j+j'][j-j'+1]
    const cplx b = b_coef(3, 1, q);
    CHECK(std::abs(b * b - qnum(2, q) * qnum(2, q)) < 1e-14);
  }
}
