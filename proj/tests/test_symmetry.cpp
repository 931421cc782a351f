#include "doctest.h"
#include "helpers.hpp"
#include "qtt/symmetry.hpp"

using namespace qtt;

namespace {

void require_identities(const SymmetryReport& r, double tol) {
  CHECK_FALSE(r.identities.empty());
  for (const auto& x : r.identities) {
    CAPTURE(x.name);
    CHECK(x.residual < tol);
  }
}

void require_controls(const SymmetryReport& r) {
  CHECK_FALSE(r.controls.empty());
  for (const auto& x : r.controls) {
    CAPTURE(x.name);
    CHECK(x.residual > 1e-4);
  }
}

double find(const SymmetryReport& r, const std::string& name) {
  for (const auto& x : r.identities)
    if (x.name == name) return x.residual;
  FAIL("missing identity " << name);
  return 0.0;
}

cplx value(const SymmetryReport& r, const std::string& name) {
  for (const auto& [k, v] : r.values)
    if (k == name) return v;
  FAIL("missing value " << name);
  return 0.0;
}

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("exchange relations in the three cases") {
    test::Draw d(61);
    const BoundaryParams b = d.boundary();
    for (ExchangeCase ec : {ExchangeCase::W0, ExchangeCase::W1, ExchangeCase::Mixed}) {
      ChainConfig c = homogeneous_config(1, 2, b, test::kQ);
      c.boundary = constrain(c.boundary, ec, test::kQ);
      const SymmetryReport r = exchange_check(c, ec);
      require_identities(r, 1e-9);
      require_controls(r);
    }
  }

  TEST_CASE("unconstrained right boundary is refused") {
    test::Draw d(62);
    const ChainConfig c = homogeneous_config(1, 2, d.boundary(), test::kQ);
    CHECK_THROWS_AS(exchange_check(c, ExchangeCase::W0), ConstraintViolation);
    CHECK_THROWS_AS(parse_exchange_case("w2"), ConfigError);
  }

  TEST_CASE("Hamiltonian commutators for spins 1/2 and 1") {
    test::Draw d(63);
    const KParams left = d.kparams();
    for (int tj : {1, 2}) {
      const SymmetryReport r = hamiltonian_symmetry_check(tj, 2, left, d(), d(), test::kQ);
      require_identities(r, 1e-9);
      require_controls(r);
    }
  }

  TEST_CASE("transfer matrices commute with the mixed charge") {
    test::Draw d(64);
    ChainConfig c = d.chain({1, 2});
    c.boundary = constrain(c.boundary, ExchangeCase::Mixed, test::kQ);
    const SymmetryReport r = transfer_symmetry_check(c, {d(), d()}, 2);
    require_identities(r, 1e-8);
    require_controls(r);
  }

  TEST_CASE("site recursion of W0 matches the mode construction") {
    test::Draw d(65);
    const ChainConfig c = d.chain({1, 2, 1});
    const Mat W = alternating_ops(c, 3).W_minus[0];
    CHECK(rel_residual(w0_recursive(c.two_js, c.inhoms, c.boundary.left, test::kQ), W) < 1e-13);
  }

  TEST_CASE("XXX limit: the spectrum scales with sqrt(k+ k-)") {
    test::Draw d(66);
    const KParams left = d.kparams();
    for (std::size_t N = 1; N <= 4; ++N) {
      const SymmetryReport r = xxx_check(N, left, d());
      CHECK(find(r, "W0 coproduct image") < 1e-12);
      CHECK(find(r, "spectrum (N-2n) sqrt(k+ k-) + eps+") < 1e-10);
      CHECK(find(r, "recursive eigenvectors, sqrt(k+ k-) eigenvalues") < 1e-10);
      CHECK(find(r, "[H_XXX, W0]") < 1e-10);
      CHECK(find(r, "spectrum (N-2n) sqrt(k+/k-) + eps+ printed") > 1e-3);
      require_controls(r);
    }
    // With k_- = 1 the displayed eigenvalues coincide.
    KParams unit = left;
    unit.k_minus = 1.0;
    const SymmetryReport r = xxx_check(3, unit, d());
    CHECK(find(r, "spectrum (N-2n) sqrt(k+/k-) + eps+ printed") < 1e-10);
  }

  TEST_CASE("blob relations with corrected densities") {
    test::Draw d(67);
    const KParams left = d.kparams();
    const SymmetryReport r = blob_check(3, left, test::kQ, false);
    require_identities(r, 1e-9);
    require_controls(r);
    CHECK(std::abs(value(r, "delta") - (test::kQ + 1.0 / test::kQ)) < 1e-12);
  }

  TEST_CASE("displayed blob densities miss the TL relations") {
    test::Draw d(68);
    const SymmetryReport r = blob_check(3, d.kparams(), test::kQ, true);
    CHECK(find(r, "TL e_i e_{i+-1} e_i = e_i") > 1e-3);
    CHECK(find(r, "[W0, e_i]") > 1e-3);
  }
}
