#include "qtt/repspace.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qtt {

cplx b_coef(int two_j, int two_jp, cplx q) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, double, double>, cplx> cache;
  const auto key = std::make_tuple(two_j, two_jp, q.real(), q.imag());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double j = 0.5 * two_j, jp = 0.5 * two_jp;
  const cplx v = std::sqrt(qnum(j + jp, q) * qnum(j - jp + 1, q));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

Mat SpinRep::s3_matrix() const {
  Mat m = Mat::Zero(dim(), dim());
  for (int n = 0; n < dim(); ++n) m(n, n) = static_cast<double>(s3[static_cast<std::size_t>(n)]);
  return m;
}

Mat SpinRep::qpow_s3(double a) const {
  Mat m = Mat::Zero(dim(), dim());
  for (int n = 0; n < dim(); ++n) m(n, n) = qpow(q, a * s3[static_cast<std::size_t>(n)]);
  return m;
}

SpinRep spin_rep(int two_j, cplx q) {
  if (two_j < 0) throw std::invalid_argument("spin_rep: negative spin");
  SpinRep r;
  r.two_j = two_j;
  r.q = q;
  const int d = two_j + 1;
  r.splus = Mat::Zero(d, d);
  r.sminus = Mat::Zero(d, d);
  r.s3.resize(static_cast<std::size_t>(d));
  // 1-based m, n: (S+)_{m,m+1} = B_{j, j+1-m}; (S-)_{n+1,n} = B_{j, j+1-n}
  for (int m = 1; m < d; ++m) {
    const cplx b = b_coef(two_j, two_j + 2 - 2 * m, q);
    r.splus(m - 1, m) = b;
    r.sminus(m, m - 1) = b;
  }
  for (int n = 1; n <= d; ++n) r.s3[static_cast<std::size_t>(n - 1)] = two_j + 2 - 2 * n;
  return r;
}

SiteLayout SiteLayout::from_spins(const std::vector<int>& two_js) {
  SiteLayout l;
  for (auto it = two_js.rbegin(); it != two_js.rend(); ++it) l.dims.push_back(*it + 1);
  return l;
}

std::size_t SiteLayout::total() const {
  std::size_t t = 1;
  for (int d : dims) t *= static_cast<std::size_t>(d);
  return t;
}

Mat embed_site(const Mat& op, std::size_t site, const SiteLayout& layout) {
  if (site < 1 || site > layout.dims.size()) throw DimensionMismatch("embed_site: site out of range");
  const std::size_t pos = layout.position(site);
  if (op.rows() != layout.dims[pos] || op.cols() != layout.dims[pos])
    throw DimensionMismatch("embed_site: operator dimension differs from site dimension");
  Mat out = Mat::Identity(1, 1);
  for (std::size_t k = 0; k < layout.dims.size(); ++k)
    out = kron(out, k == pos ? op : Mat(Mat::Identity(layout.dims[k], layout.dims[k])));
  return out;
}

namespace {
template <class M>
struct Traits;
template <>
struct Traits<Mat> {
  using Entry = cplx;
  static std::size_t rows(const Mat& m) { return static_cast<std::size_t>(m.rows()); }
  static Mat zeros(std::size_t n) { return Mat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)); }
  static bool is_zero(const Mat& m, std::size_t i, std::size_t j) {
    return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == 0.0;
  }
  static void add(Mat& out, std::size_t i, std::size_t j, const Mat& op, std::size_t a, std::size_t b) {
    out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
        op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }
};
template <>
struct Traits<PolyMatrix> {
  static std::size_t rows(const PolyMatrix& m) { return m.rows(); }
  static PolyMatrix zeros(std::size_t n) { return PolyMatrix(n, n); }
  static bool is_zero(const PolyMatrix& m, std::size_t i, std::size_t j) { return m(i, j).is_zero(); }
  static void add(PolyMatrix& out, std::size_t i, std::size_t j, const PolyMatrix& op, std::size_t a,
                  std::size_t b) {
    out(i, j) += op(a, b);
  }
};
}  // namespace

template <class M>
M embed_pair(const M& op, const std::vector<int>& dims, std::size_t a, std::size_t b) {
  using T = Traits<M>;
  if (a >= dims.size() || b >= dims.size() || a == b) throw DimensionMismatch("embed_pair: bad slots");
  const auto da = static_cast<std::size_t>(dims[a]), db = static_cast<std::size_t>(dims[b]);
  if (T::rows(op) != da * db) throw DimensionMismatch("embed_pair: operator dimension mismatch");
  std::size_t total = 1;
  std::vector<std::size_t> stride(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    stride[k] = total;
    total *= static_cast<std::size_t>(dims[k]);
  }
  M out = T::zeros(total);
  for (std::size_t row = 0; row < total; ++row) {
    const std::size_t ra = (row / stride[a]) % da, rb = (row / stride[b]) % db;
    const std::size_t base = row - ra * stride[a] - rb * stride[b];
    const std::size_t oprow = ra * db + rb;
    for (std::size_t ca = 0; ca < da; ++ca)
      for (std::size_t cb = 0; cb < db; ++cb) {
        const std::size_t opcol = ca * db + cb;
        if (T::is_zero(op, oprow, opcol)) continue;
        T::add(out, row, base + ca * stride[a] + cb * stride[b], op, oprow, opcol);
      }
  }
  return out;
}

template Mat embed_pair<Mat>(const Mat&, const std::vector<int>&, std::size_t, std::size_t);
template PolyMatrix embed_pair<PolyMatrix>(const PolyMatrix&, const std::vector<int>&, std::size_t, std::size_t);

Mat swap_matrix(int d1, int d2) {
  Mat p = Mat::Zero(d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k) p(k * d1 + i, i * d2 + k) = 1.0;
  return p;
}

Mat permutation(int two_j) { return swap_matrix(two_j + 1, two_j + 1); }

Mat partial_trace_aux(const Mat& m, std::size_t aux_dim) { return partial_trace_last(m, aux_dim); }

PolyMatrix partial_trace_aux(const PolyMatrix& m, std::size_t aux_dim) { return partial_trace_last(m, aux_dim); }

}  // namespace qtt
