#include "doctest.h"
#include "helpers.hpp"
#include "qtt/intertwiners.hpp"
#include "qtt/printed.hpp"
#include "qtt/repspace.hpp"

using namespace qtt;

TEST_SUITE("intertwiners") {
  TEST_CASE("E F is a projector of rank 2j+1") {
    const cplx q = test::kQ;
    for (int tj = 1; tj <= 4; ++tj) {
      const SpinMaps m = spin_maps(tj, q);
      CHECK(m.E.rows() == 2 * tj);
      CHECK(m.E.cols() == tj + 1);
      const Mat P = m.E * m.F;
      CHECK(rel_residual(P * P, P) < 1e-13);
      CHECK(std::abs(P.trace() - cplx(tj + 1)) < 1e-12);
    }
  }

  TEST_CASE("E intertwines the coproduct of the Cartan generator") {
    // q^{S3} is group-like, so E maps weight spaces of spin j onto total weight of 1/2 (x) (j-1/2).
    const cplx q = test::kQ;
    for (int tj = 2; tj <= 4; ++tj) {
      const Mat K = kron(spin_rep(1, q).qpow_s3(1.0), spin_rep(tj - 1, q).qpow_s3(1.0));
      const SpinMaps m = spin_maps(tj, q);
      CHECK(rel_residual(K * m.E, m.E * spin_rep(tj, q).qpow_s3(1.0)) < 1e-13);
    }
  }

  TEST_CASE("fusion relations up to spin 2") {
    for (int tj = 1; tj <= 4; ++tj) {
      for (const auto& r : fusion_relations(tj, test::kQ)) {
        CAPTURE(tj);
        CAPTURE(r.name);
        CHECK(r.residual < 1e-10);
      }
    }
  }

  TEST_CASE("displayed spin maps and barred maps") {
    const cplx q = test::kQ;
    for (int tj : {2, 3}) {
      const SpinMaps a = spin_maps(tj, q), b = spin_maps_printed(tj, q);
      CHECK(rel_residual(a.E, b.E) < 1e-13);
      CHECK(rel_residual(a.F, b.F) < 1e-13);
      CHECK(rel_residual(a.H, b.H) < 1e-13);
    }
    for (int tl : {0, 1}) {
      const BarMaps a = bar_maps(tl, q), b = bar_maps_printed(tl, q);
      CHECK(rel_residual(a.Ebar, b.Ebar) < 1e-13);
      CHECK(rel_residual(a.Fbar, b.Fbar) < 1e-13);
    }
  }

  TEST_CASE("barred scalar identity holds from label 1/2 on") {
    const cplx q = test::kQ;
    for (int tl = 1; tl <= 4; ++tl) CHECK(bar_scalar_identity(tl, q) < 1e-12);
    // The empty product at label 0 does not reproduce the scalar.
    CHECK(bar_scalar_identity(0, q) > 1e-2);
  }

  TEST_CASE("maps at a different q break F E = I") {
    const cplx q = test::kQ;
    const SpinMaps a = spin_maps(3, q), b = spin_maps(3, q * 1.01);
    CHECK(rel_residual(a.F * b.E, Mat::Identity(4, 4)) > 1e-4);
  }
}
