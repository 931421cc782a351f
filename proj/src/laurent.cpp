#include "qtt/laurent.hpp"

#include <algorithm>

#include "qtt/simd.hpp"

namespace qtt {

namespace {
cplx ipow(cplx x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  cplx r = 1.0;
  while (n) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}
}  // namespace

LaurentPoly::LaurentPoly(cplx constant) {
  if (constant != 0.0) c_ = {constant};
}

LaurentPoly::LaurentPoly(int lo, std::vector<cplx> coeffs) : lo_(lo), c_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(cplx a, int n2) {
  LaurentPoly p;
  if (a != 0.0) {
    p.lo_ = n2;
    p.c_ = {a};
  }
  return p;
}

LaurentPoly LaurentPoly::c_of(cplx a, int e2) {
  return monomial(a, e2) - monomial(1.0 / a, -e2);
}

LaurentPoly LaurentPoly::U(cplx q) {
  const cplx k = q + 1.0 / q;
  return monomial(q / k, 4) + monomial(1.0 / (q * k), -4);
}

cplx LaurentPoly::coeff(int n2) const {
  if (c_.empty() || n2 < lo_ || n2 > hi()) return 0.0;
  return c_[static_cast<std::size_t>(n2 - lo_)];
}

double LaurentPoly::max_abs() const {
  double m = 0.0;
  for (const auto& x : c_) m = std::max(m, std::abs(x));
  return m;
}

bool LaurentPoly::only_even() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0.0 && ((lo_ + static_cast<int>(i)) % 2 != 0)) return false;
  return true;
}

LaurentPoly& LaurentPoly::trim(double floor) {
  for (auto& x : c_)
    if (std::abs(x) <= floor) x = 0.0;
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0.0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0.0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<cplx>(c_.begin() + static_cast<long>(first), c_.begin() + static_cast<long>(last));
    lo_ += static_cast<int>(first);
  }
  return *this;
}

LaurentPoly& LaurentPoly::normalize() { return trim(kTrim * max_abs()); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {
LaurentPoly& accumulate(LaurentPoly& a, const LaurentPoly& b, double sign, int& lo,
                        std::vector<cplx>& c) {
  if (b.is_zero()) return a;
  const double scale = std::max(a.max_abs(), b.max_abs());
  if (a.is_zero()) {
    lo = b.lo();
    c.assign(b.coeffs().begin(), b.coeffs().end());
    if (sign < 0)
      for (auto& x : c) x = -x;
    return a;
  }
  const int nlo = std::min(lo, b.lo());
  const int nhi = std::max(lo + static_cast<int>(c.size()) - 1, b.hi());
  std::vector<cplx> out(static_cast<std::size_t>(nhi - nlo + 1), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) out[static_cast<std::size_t>(lo - nlo) + i] = c[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i)
    out[static_cast<std::size_t>(b.lo() - nlo) + i] += sign * b.coeffs()[i];
  lo = nlo;
  c = std::move(out);
  a.trim(LaurentPoly::kTrim * scale);
  return a;
}
}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return accumulate(*this, o, 1.0, lo_, c_); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return accumulate(*this, o, -1.0, lo_, c_); }

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  if (s == 0.0) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> out(a.c_.size() + b.c_.size() - 1, 0.0);
  simd::conv(a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size(), out.data());
  LaurentPoly r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_ = std::move(out);
  r.trim(LaurentPoly::kTrim * a.max_abs() * b.max_abs());
  return r;
}

LaurentPoly LaurentPoly::shift_q(int s2, cplx q) const {
  if (s2 == 0) return *this;
  LaurentPoly r = *this;
  const cplx lq = std::log(q);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const int n2 = lo_ + static_cast<int>(i);
    if (n2 != 0) r.c_[i] *= std::exp(lq * (0.25 * s2 * n2));
  }
  return r;
}

LaurentPoly LaurentPoly::subst_inv_shift(int s2, cplx q) const {
  if (is_zero()) return {};
  const cplx lq = std::log(q);
  LaurentPoly r;
  r.lo_ = -hi();
  r.c_.assign(c_.rbegin(), c_.rend());
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    const int n2 = -(r.lo_ + static_cast<int>(i));  // original exponent
    if (n2 != 0 && s2 != 0) r.c_[i] *= std::exp(lq * (0.25 * s2 * n2));
  }
  return r;
}

LaurentPoly LaurentPoly::subst_power(int k) const {
  if (k == 0) throw std::invalid_argument("subst_power: k must be nonzero");
  if (is_zero()) return {};
  if (k < 0) return subst_inv_shift(0, 1.0).subst_power(-k);
  LaurentPoly r;
  r.lo_ = lo_ * k;
  r.c_.assign(static_cast<std::size_t>((hi() - lo_) * k + 1), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(k)] = c_[i];
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.lo_ = lo_ - 2;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = 0.5 * (lo_ + static_cast<int>(i)) * c_[i];
  r.normalize();
  return r;
}

cplx LaurentPoly::eval_sqrt(cplx s) const {
  if (s == 0.0) throw std::invalid_argument("LaurentPoly::eval: zero evaluation point");
  if (is_zero()) return 0.0;
  // Horner in s from the top coefficient, then multiply by s^lo.
  cplx acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * s + c_[i];
  return acc * ipow(s, lo_);
}

cplx LaurentPoly::eval(cplx u) const {
  if (u == 0.0) throw std::invalid_argument("LaurentPoly::eval: zero evaluation point");
  if (is_zero()) return 0.0;
  if (only_even()) {
    cplx acc = 0.0;
    const int l = (lo_ % 2 == 0) ? lo_ : lo_ + 1;
    for (int n = hi() - (hi() - l) % 2; n >= l; n -= 2) acc = acc * u + coeff(n);
    return acc * ipow(u, l / 2);
  }
  return eval_sqrt(std::sqrt(u));
}

bool LaurentPoly::approx_eq(const LaurentPoly& o, double tol) const {
  const double scale = std::max(max_abs(), o.max_abs());
  if (scale == 0.0) return true;
  const int l = std::min(is_zero() ? o.lo() : lo_, o.is_zero() ? lo_ : o.lo());
  const int h = std::max(is_zero() ? o.hi() : hi(), o.is_zero() ? hi() : o.hi());
  for (int n = l; n <= h; ++n)
    if (std::abs(coeff(n) - o.coeff(n)) > tol * scale) return false;
  return true;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json e = nlohmann::json::array(), re = nlohmann::json::array(), im = nlohmann::json::array();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0.0) continue;
    e.push_back(lo_ + static_cast<int>(i));
    re.push_back(c_[i].real());
    im.push_back(c_[i].imag());
  }
  return {{"half_exponents", e}, {"re", re}, {"im", im}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly r;
  const auto& e = j.at("half_exponents");
  for (std::size_t i = 0; i < e.size(); ++i)
    r += monomial(cplx(j.at("re")[i].get<double>(), j.at("im")[i].get<double>()), e[i].get<int>());
  return r;
}

namespace {
bool divide_top_down(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, double& rem) {
  const int qlo = a.lo() - b.lo(), qhi = a.hi() - b.hi();
  if (qhi < qlo) return false;
  std::vector<cplx> r(a.coeffs());
  std::vector<cplx> qc(static_cast<std::size_t>(qhi - qlo + 1), 0.0);
  const auto& bc = b.coeffs();
  const cplx lead = bc.back();
  for (int e = qhi; e >= qlo; --e) {
    const std::size_t top = static_cast<std::size_t>(e + b.hi() - a.lo());
    const cplx f = r[top] / lead;
    qc[static_cast<std::size_t>(e - qlo)] = f;
    if (f == 0.0) continue;
    for (std::size_t k = 0; k < bc.size(); ++k) r[top - (bc.size() - 1) + k] -= f * bc[k];
  }
  rem = 0.0;
  for (const auto& x : r) rem = std::max(rem, std::abs(x));
  quot = LaurentPoly(qlo, std::move(qc));
  return true;
}

bool divide_bottom_up(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, double& rem) {
  const int qlo = a.lo() - b.lo(), qhi = a.hi() - b.hi();
  if (qhi < qlo) return false;
  std::vector<cplx> r(a.coeffs());
  std::vector<cplx> qc(static_cast<std::size_t>(qhi - qlo + 1), 0.0);
  const auto& bc = b.coeffs();
  const cplx low = bc.front();
  for (int e = qlo; e <= qhi; ++e) {
    const std::size_t bot = static_cast<std::size_t>(e + b.lo() - a.lo());
    const cplx f = r[bot] / low;
    qc[static_cast<std::size_t>(e - qlo)] = f;
    if (f == 0.0) continue;
    for (std::size_t k = 0; k < bc.size(); ++k) r[bot + k] -= f * bc[k];
  }
  rem = 0.0;
  for (const auto& x : r) rem = std::max(rem, std::abs(x));
  quot = LaurentPoly(qlo, std::move(qc));
  return true;
}
}  // namespace

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b, double tol, double* remainder_out) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (a.is_zero()) {
    if (remainder_out) *remainder_out = 0.0;
    return {};
  }
  const double scale = a.max_abs();
  LaurentPoly q1, q2;
  double r1 = 0.0, r2 = 0.0;
  if (!divide_top_down(a, b, q1, r1)) throw NotDivisible("exact_div: divisor span exceeds dividend span");
  if (r1 <= tol * scale) {
    if (remainder_out) *remainder_out = r1 / scale;
    return q1;
  }
  divide_bottom_up(a, b, q2, r2);
  if (remainder_out) *remainder_out = std::min(r1, r2) / scale;
  if (r2 <= tol * scale) return q2;
  throw NotDivisible("exact_div: relative remainder " + std::to_string(std::min(r1, r2) / scale));
}

LaurentPoly c_product(const std::vector<cplx>& as, int e2) {
  LaurentPoly r(1.0);
  for (const auto& a : as) r = r * LaurentPoly::c_of(a, e2);
  return r;
}

bool RationalScalar::approx_eq(const RationalScalar& o, double tol) const {
  return (num * o.den).approx_eq(o.num * den, tol);
}

}  // namespace qtt
