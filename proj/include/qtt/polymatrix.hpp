#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qtt/laurent.hpp"

namespace qtt {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Dense matrix of Laurent polynomials, row-major storage.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix constant(const Mat& m);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  const std::vector<LaurentPoly>& entries() const { return e_; }

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  PolyMatrix& operator*=(cplx s);
  PolyMatrix& operator*=(const LaurentPoly& p);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(PolyMatrix a, cplx s) { return a *= s; }
  friend PolyMatrix operator*(cplx s, PolyMatrix a) { return a *= s; }
  friend PolyMatrix operator*(PolyMatrix a, const LaurentPoly& p) { return a *= p; }
  friend PolyMatrix operator*(const LaurentPoly& p, PolyMatrix a) { return a *= p; }

  PolyMatrix transpose() const;
  PolyMatrix shift_q(int s2, cplx q) const;
  PolyMatrix subst_inv_shift(int s2, cplx q) const;
  PolyMatrix subst_power(int k) const;
  PolyMatrix derivative() const;
  Mat eval(cplx u) const;

  // Entrywise checked division by a scalar polynomial; the worst relative
  // remainder is written to remainder_out.
  PolyMatrix exact_div(const LaurentPoly& d, double tol = 1e-10, double* remainder_out = nullptr) const;

  double max_abs() const;
  int min_exponent() const;
  int max_exponent() const;
  // Zeros coefficients below kTrim times the matrix-wide maximum.
  PolyMatrix& normalize();

  nlohmann::json to_json() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<LaurentPoly> e_;
};

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
// tr over the leading factor of dimension d (A = sum over a in first factor)
PolyMatrix partial_trace_first(const PolyMatrix& m, std::size_t d);
// tr over the trailing factor of dimension d
PolyMatrix partial_trace_last(const PolyMatrix& m, std::size_t d);

// Largest coefficient difference relative to the larger operand.
double residual(const PolyMatrix& a, const PolyMatrix& b);
bool approx_eq(const PolyMatrix& a, const PolyMatrix& b, double tol = 1e-8);

// Matrix with a common scalar denominator.
struct RationalMatrix {
  PolyMatrix num;
  LaurentPoly den{1.0};
  Mat eval(cplx u) const { return num.eval(u) / den.eval(u); }
};
// Cross-multiplied comparison.
double residual(const RationalMatrix& a, const RationalMatrix& b);
bool approx_eq(const RationalMatrix& a, const RationalMatrix& b, double tol = 1e-8);

// Relative Frobenius residual of dense matrices.
double rel_residual(const Mat& a, const Mat& b);

Mat kron(const Mat& a, const Mat& b);
Mat partial_trace_last(const Mat& m, std::size_t d);

}  // namespace qtt
