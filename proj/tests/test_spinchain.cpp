#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "qtt/alternating.hpp"
#include "qtt/spinchain.hpp"

using namespace qtt;

TEST_SUITE("spinchain") {
  TEST_CASE("configuration validation") {
    ChainConfig c;
    c.two_js = {1, 2};
    c.inhoms = {1.0};
    CHECK_THROWS_AS(c.validate(), DimensionMismatch);
    c.inhoms = {1.0, 1.0};
    CHECK_NOTHROW(c.validate());
    CHECK(c.dim() == 6);
    c.two_js = {0, 2};
    CHECK_THROWS_AS(c.validate(), DimensionMismatch);
  }

  TEST_CASE("dimension guard honours QTT_DIM_CAP") {
    ChainConfig c;
    c.two_js = {1, 1, 1};
    c.inhoms = {1.0, 1.0, 1.0};
    setenv("QTT_DIM_CAP", "4", 1);
    CHECK(dimension_cap() == 4);
    CHECK_THROWS_AS(c.validate(), DimensionGuard);
    unsetenv("QTT_DIM_CAP");
    CHECK(dimension_cap() == 4096);
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("transfer matrices commute") {
    test::Draw d(41);
    const Chain ch(d.chain({1, 2}));
    const cplx u = d(), v = d();
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 2; ++b) CHECK(commutator_residual(ch.transfer(a, u), ch.transfer(b, v)) < 1e-11);
  }

  TEST_CASE("normalized transfer matrix is a scalar multiple") {
    test::Draw d(42);
    const Chain ch(d.chain({2, 1}));
    const cplx u = d();
    for (int tj = 1; tj <= 3; ++tj)
      CHECK(rel_residual(ch.transfer_tilde(tj, u), ch.renorm_g(tj, u) * ch.transfer(tj, u)) < 1e-11);
  }

  TEST_CASE("interpolated numerator reproduces point values") {
    test::Draw d(43);
    const Chain ch(d.chain({1, 1}));
    const RationalMatrix t = ch.transfer_tilde_poly(1);
    const cplx u = d();
    CHECK(rel_residual(t.eval(u), ch.transfer_tilde(1, u)) < 1e-10);
  }

  TEST_CASE("quantum determinant factorizes over sites") {
    test::Draw d(44);
    for (const auto& sp : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {2, 1, 1}}) {
      const ChainConfig c = d.chain(sp);
      const Chain ch(c);
      const cplx u = d();
      const Mat I = Mat::Identity(ch.dim(), ch.dim());
      CHECK(rel_residual(ch.gamma_image(u), ch.gamma_expected(u) * I) < 1e-10);
      CHECK_NOTHROW(quantum_det_image(c, d()));
    }
  }

  TEST_CASE("factorization failure is reported") {
    test::Draw d(45);
    ChainConfig c = d.chain({1, 1});
    const Chain ch(c);
    ChainConfig bad = c;
    bad.boundary.left.eps_plus *= 1.05;
    const cplx u = d();
    CHECK(rel_residual(ch.gamma_image(u), Chain(bad).gamma_expected(u) * Mat::Identity(4, 4)) > 1e-4);
  }

  TEST_CASE("TT-relations") {
    test::Draw d(46);
    const Chain ch(d.chain({1, 2}));
    const cplx u = d();
    for (int tj = 2; tj <= 4; ++tj) CHECK(tt_residual(ch, tj, u) < 1e-9);
    const cplx q = ch.config().q;
    const Mat plain = ch.transfer(1, u * qpow(q, -0.5)) * ch.transfer(1, u * qpow(q, 0.5));
    CHECK(rel_residual(ch.transfer(2, u), plain) > 1e-4);
  }

  TEST_CASE("T-system and Y-system") {
    test::Draw d(47);
    const Chain ch(d.chain({1, 1}));
    const cplx u = d();
    for (int tj = 1; tj <= 2; ++tj) {
      CHECK(tsystem_residual(ch, tj, u) < 1e-8);
      CHECK(ysystem_residual(ch, tj, u) < 1e-8);
    }
  }

  TEST_CASE("dressed reflection equation") {
    test::Draw d(48);
    const Chain ch(d.chain({1, 2}));
    CHECK(dressed_reflection_residual(ch, 1, 2, d(), d()) < 1e-10);
  }

  TEST_CASE("alternating relations on small chains") {
    test::Draw d(49);
    for (const auto& sp : std::vector<std::vector<int>>{{1, 1}, {2, 1}}) {
      const ChainConfig c = d.chain(sp);
      for (const auto& r : aq_relations(c, 2)) {
        CAPTURE(r.name);
        CHECK(r.residual < 1e-10);
      }
      const cplx u = d();
      CHECK(rel_residual(transfer_from_modes(c, u), Chain(c).transfer_tilde(1, u)) < 1e-10);
    }
  }

  TEST_CASE("diagonal boundaries are rejected by the mode construction") {
    test::Draw d(50);
    ChainConfig c = d.chain({1});
    c.boundary.left.k_plus = 0.0;
    CHECK_THROWS_AS(alternating_ops(c, 2), DiagonalBoundaryUnsupported);
  }
}
