#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qtt/laurent.hpp"
#include "qtt/polymatrix.hpp"
#include "qtt/simd.hpp"

using namespace qtt;
using qtt::test::Draw;

namespace {

LaurentPoly random_poly(Draw& d, int lo, int n) {
  std::vector<cplx> c;
  for (int i = 0; i < n; ++i) c.push_back(d() - 1.2);
  return LaurentPoly(lo, c);
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("product evaluates to the product of values") {
    Draw d(1);
    const LaurentPoly a = random_poly(d, -5, 7), b = random_poly(d, 3, 4);
    const LaurentPoly p = a * b;
    CHECK(p.lo() == -2);
    CHECK(p.hi() == a.hi() + b.hi());
    for (int i = 0; i < 4; ++i) {
      const cplx u = d();
      CHECK(rel(p.eval(u), a.eval(u) * b.eval(u)) < 1e-13);
    }
  }

  TEST_CASE("c_of and half-step exponents") {
    const cplx a(0.7, 0.3), u(1.3, -0.4);
    CHECK(rel(LaurentPoly::c_of(a).eval(u), a * u - 1.0 / (a * u)) < 1e-14);
    const cplx s = std::sqrt(u);
    CHECK(rel(LaurentPoly::c_of(a, 1).eval(u), a * s - 1.0 / (a * s)) < 1e-14);
    CHECK(rel(LaurentPoly::monomial(2.0, 3).eval_sqrt(-s), -2.0 * s * s * s) < 1e-14);
  }

  TEST_CASE("substitutions") {
    Draw d(2);
    const LaurentPoly p = random_poly(d, -3, 6);
    const cplx q = test::kQ, u = d();
    CHECK(rel(p.shift_q(2, q).eval(u), p.eval(u * q)) < 1e-13);
    CHECK(rel(p.subst_inv_shift(-2, q).eval(u), p.eval(1.0 / (u * q))) < 1e-13);
    CHECK(p.subst_inv_shift(3, q).subst_inv_shift(3, q).approx_eq(p, 1e-13));
    CHECK(rel(p.subst_power(2).eval(u), p.eval(u * u)) < 1e-13);
  }

  TEST_CASE("derivative against central differences") {
    Draw d(3);
    const LaurentPoly p = random_poly(d, -4, 9);
    const cplx u = d();
    const double h = 1e-5;
    const cplx fd = (p.eval(u + h) - p.eval(u - h)) / (2.0 * h);
    CHECK(rel(p.derivative().eval(u), fd) < 1e-8);
  }

  TEST_CASE("exact division recovers the factor") {
    Draw d(4);
    const LaurentPoly a = random_poly(d, -2, 5);
    const LaurentPoly b = LaurentPoly::c_of(cplx(0.9, 0.2)) * LaurentPoly::c_of(cplx(1.1, -0.5));
    double rem = 1.0;
    const LaurentPoly quo = exact_div(a * b, b, 1e-10, &rem);
    CHECK(quo.approx_eq(a, 1e-12));
    CHECK(rem < 1e-13);
    CHECK_THROWS_AS(exact_div(a * b + LaurentPoly::monomial(0.5, 0), b), NotDivisible);
  }

  TEST_CASE("trim and zero") {
    LaurentPoly p(-2, {1e-20, 1.0, 0.0, 2.0, 1e-20});
    p.normalize();
    CHECK(p.lo() == -1);
    CHECK(p.hi() == 1);
    CHECK((p - p).is_zero());
  }

  TEST_CASE("json round trip") {
    Draw d(5);
    const LaurentPoly p = random_poly(d, -3, 4);
    CHECK(LaurentPoly::from_json(p.to_json()).approx_eq(p, 0.0));
  }

  TEST_CASE("rational scalars compare by cross-multiplication") {
    const LaurentPoly f = LaurentPoly::c_of(cplx(0.8, 0.1)), g = LaurentPoly::c_of(cplx(1.3, 0.2));
    const RationalScalar a{f * g, g * g}, b{f, g};
    CHECK(a.approx_eq(b));
    CHECK_FALSE(a.approx_eq(RationalScalar{g, f}));
  }

  TEST_CASE("polymatrix exact division reports the remainder") {
    const LaurentPoly d = LaurentPoly::c_of(cplx(0.8, 0.3));
    PolyMatrix m(2, 2);
    m(0, 0) = d * LaurentPoly::monomial(1.0, 2);
    m(1, 1) = d * 3.0;
    double rem = 1.0;
    const PolyMatrix quo = m.exact_div(d, 1e-10, &rem);
    CHECK(rem < 1e-14);
    CHECK(std::abs(quo(1, 1).eval(1.7) - 3.0) < 1e-13);
    m(0, 1) = LaurentPoly::c_of(cplx(1.7, 0.1));
    m.exact_div(d, 1e300, &rem);
    CHECK(rem > 1e-3);
  }
}

TEST_SUITE("simd") {
  TEST_CASE("scalar convolution against the definition") {
    Draw d(6);
    std::vector<cplx> a(13), b(5);
    for (auto& x : a) x = d();
    for (auto& x : b) x = d();
    std::vector<cplx> out(a.size() + b.size() - 1, 0.0), ref(out.size(), 0.0);
    simd::conv_scalar(a.data(), a.size(), b.data(), b.size(), out.data());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < b.size(); ++k) ref[i + k] += a[i] * b[k];
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(std::abs(out[i] - ref[i]) < 1e-13);
  }

  TEST_CASE("AVX2 convolution matches the scalar reference") {
    if (!simd::avx2_available()) {
      MESSAGE("AVX2 not available; scalar path only");
      return;
    }
    Draw d(7);
    for (std::size_t na : {1u, 2u, 3u, 8u, 17u}) {
      for (std::size_t nb : {1u, 4u, 9u}) {
        std::vector<cplx> a(na), b(nb);
        for (auto& x : a) x = d();
        for (auto& x : b) x = d();
        std::vector<cplx> s(na + nb - 1, 0.0), v(na + nb - 1, 0.0);
        simd::conv_scalar(a.data(), na, b.data(), nb, s.data());
        simd::conv_avx2(a.data(), na, b.data(), nb, v.data());
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i] - v[i]) < 1e-13 * (1.0 + std::abs(s[i])));
      }
    }
  }

  TEST_CASE("backend switch leaves Laurent products unchanged") {
    Draw d(8);
    const LaurentPoly a = random_poly(d, -6, 11), b = random_poly(d, 1, 7);
    const simd::Backend saved = simd::active_backend();
    simd::set_backend(simd::Backend::Scalar);
    const LaurentPoly ps = a * b;
    if (simd::avx2_available()) {
      simd::set_backend(simd::Backend::Avx2);
      CHECK((a * b).approx_eq(ps, 1e-14));
    }
    simd::set_backend(saved);
    CHECK(!simd::backend_name(saved).empty());
  }
}
