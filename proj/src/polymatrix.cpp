#include "qtt/polymatrix.hpp"

#include <algorithm>
#include <climits>

namespace qtt {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}
}  // namespace

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1.0);
  return m;
}

PolyMatrix PolyMatrix::constant(const Mat& a) {
  PolyMatrix m(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = LaurentPoly(a(i, j));
  return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  require(r_ == o.r_ && c_ == o.c_, "PolyMatrix +: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  require(r_ == o.r_ && c_ == o.c_, "PolyMatrix -: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(cplx s) {
  for (auto& x : e_) x *= s;
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const LaurentPoly& p) {
  for (auto& x : e_) x = x * p;
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require(a.c_ == b.r_, "PolyMatrix *: inner dimension mismatch");
  PolyMatrix out(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const LaurentPoly& y = b(k, j);
        if (y.is_zero()) continue;
        out(i, j) += x * y;
      }
    }
  out.normalize();
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::shift_q(int s2, cplx q) const {
  PolyMatrix m = *this;
  for (auto& x : m.e_) x = x.shift_q(s2, q);
  return m;
}

PolyMatrix PolyMatrix::subst_inv_shift(int s2, cplx q) const {
  PolyMatrix m = *this;
  for (auto& x : m.e_) x = x.subst_inv_shift(s2, q);
  return m;
}

PolyMatrix PolyMatrix::subst_power(int k) const {
  PolyMatrix m = *this;
  for (auto& x : m.e_) x = x.subst_power(k);
  return m;
}

PolyMatrix PolyMatrix::derivative() const {
  PolyMatrix m = *this;
  for (auto& x : m.e_) x = x.derivative();
  return m;
}

Mat PolyMatrix::eval(cplx u) const {
  Mat m(static_cast<Eigen::Index>(r_), static_cast<Eigen::Index>(c_));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).eval(u);
  return m;
}

PolyMatrix PolyMatrix::exact_div(const LaurentPoly& d, double tol, double* remainder_out) const {
  PolyMatrix m(r_, c_);
  double worst = 0.0;
  const double scale = max_abs();
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k].is_zero()) continue;
    double rem = 0.0;
    // Entries are judged against the matrix scale so that small entries
    // carrying rounding noise are not rejected on their own scale.
    const double local = e_[k].max_abs();
    const double eff_tol = tol * scale / local;
    m.e_[k] = qtt::exact_div(e_[k], d, eff_tol, &rem);
    worst = std::max(worst, rem * local / scale);
  }
  if (remainder_out) *remainder_out = worst;
  return m;
}

double PolyMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : e_) m = std::max(m, x.max_abs());
  return m;
}

int PolyMatrix::min_exponent() const {
  int m = INT_MAX;
  for (const auto& x : e_)
    if (!x.is_zero()) m = std::min(m, x.lo());
  return m == INT_MAX ? 0 : m;
}

int PolyMatrix::max_exponent() const {
  int m = INT_MIN;
  for (const auto& x : e_)
    if (!x.is_zero()) m = std::max(m, x.hi());
  return m == INT_MIN ? 0 : m;
}

PolyMatrix& PolyMatrix::normalize() {
  const double floor = LaurentPoly::kTrim * max_abs();
  for (auto& x : e_) x.trim(floor);
  return *this;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& x : e_) entries.push_back(x.to_json());
  return {{"rows", r_}, {"cols", c_}, {"entries", entries}};
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const LaurentPoly& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

PolyMatrix partial_trace_first(const PolyMatrix& m, std::size_t d) {
  require(d > 0 && m.rows() == m.cols() && m.rows() % d == 0, "partial_trace_first: bad dimensions");
  const std::size_t n = m.rows() / d;
  PolyMatrix out(n, n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += m(a * n + i, a * n + j);
  return out;
}

PolyMatrix partial_trace_last(const PolyMatrix& m, std::size_t d) {
  require(d > 0 && m.rows() == m.cols() && m.rows() % d == 0, "partial_trace_last: bad dimensions");
  const std::size_t n = m.rows() / d;
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < d; ++a) out(i, j) += m(i * d + a, j * d + a);
  return out;
}

double residual(const PolyMatrix& a, const PolyMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "residual: shape mismatch");
  const double scale = std::max(a.max_abs(), b.max_abs());
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    const LaurentPoly d = a.entries()[k] - b.entries()[k];
    worst = std::max(worst, d.max_abs());
  }
  return worst / scale;
}

bool approx_eq(const PolyMatrix& a, const PolyMatrix& b, double tol) { return residual(a, b) <= tol; }

double residual(const RationalMatrix& a, const RationalMatrix& b) {
  return residual(a.num * b.den, b.num * a.den);
}

bool approx_eq(const RationalMatrix& a, const RationalMatrix& b, double tol) {
  return residual(a, b) <= tol;
}

double rel_residual(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("rel_residual: shape mismatch");
  const double scale = std::max(a.norm(), b.norm());
  if (scale == 0.0) return 0.0;
  return (a - b).norm() / scale;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat partial_trace_last(const Mat& m, std::size_t d) {
  const auto dd = static_cast<Eigen::Index>(d);
  if (d == 0 || m.rows() != m.cols() || m.rows() % dd != 0)
    throw DimensionMismatch("partial_trace_last: bad dimensions");
  const Eigen::Index n = m.rows() / dd;
  Mat out = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index a = 0; a < dd; ++a) out(i, j) += m(i * dd + a, j * dd + a);
  return out;
}

}  // namespace qtt
