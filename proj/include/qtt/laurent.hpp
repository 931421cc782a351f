#pragma once

#include <vector>

#include "json.hpp"

#include "qtt/common.hpp"

namespace qtt {

// Laurent polynomial in u with half-step exponents: coefficient i of coeffs()
// multiplies u^{(lo()+i)/2}. Empty coefficient vector is the zero polynomial.
class LaurentPoly {
 public:
  static constexpr double kTrim = 1e-14;
  static constexpr double kCompare = 1e-9;

  LaurentPoly() = default;
  LaurentPoly(cplx constant);  // NOLINT: implicit promotion of scalars is intended
  LaurentPoly(int lo, std::vector<cplx> coeffs);

  static LaurentPoly monomial(cplx a, int n2);
  // c(a u^{e2/2}) = a u^{e2/2} - a^{-1} u^{-e2/2}
  static LaurentPoly c_of(cplx a, int e2 = 2);
  // U = (q u^2 + q^{-1} u^{-2})/(q + q^{-1})
  static LaurentPoly U(cplx q);

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx coeff(int n2) const;
  double max_abs() const;
  bool only_even() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(cplx s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, cplx s) { return a *= s; }
  friend LaurentPoly operator*(cplx s, LaurentPoly a) { return a *= s; }

  // u -> u q^{s2/2}
  LaurentPoly shift_q(int s2, cplx q) const;
  // u -> u^{-1} q^{s2/2}
  LaurentPoly subst_inv_shift(int s2, cplx q) const;
  // u -> u^k
  LaurentPoly subst_power(int k) const;
  // d/du
  LaurentPoly derivative() const;

  // Evaluation; odd half-step exponents use the principal square root of u.
  cplx eval(cplx u) const;
  // Evaluation given s = u^{1/2} explicitly.
  cplx eval_sqrt(cplx s) const;

  // Drops coefficients below floor (absolute) and trims the ends.
  LaurentPoly& trim(double floor);
  // Relative trim at kTrim times the largest coefficient.
  LaurentPoly& normalize();

  bool approx_eq(const LaurentPoly& o, double tol = kCompare) const;

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  int lo_ = 0;
  std::vector<cplx> c_;
};

// Quotient a/b; throws NotDivisible when the remainder exceeds tol relative to |a|.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b, double tol = 1e-10,
                      double* remainder_out = nullptr);

// Product of c(a_k u^{e2/2}) over a list of prefactors a_k.
LaurentPoly c_product(const std::vector<cplx>& as, int e2 = 2);

// Rational function num/den with semantic equality.
struct RationalScalar {
  LaurentPoly num;
  LaurentPoly den{1.0};
  cplx eval(cplx u) const { return num.eval(u) / den.eval(u); }
  bool approx_eq(const RationalScalar& o, double tol = LaurentPoly::kCompare) const;
};

}  // namespace qtt
