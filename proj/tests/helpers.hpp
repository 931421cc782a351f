#pragma once

#include <random>
#include <vector>

#include "qtt/spinchain.hpp"

namespace qtt::test {

// Seeded sample points away from the unit circle.
class Draw {
 public:
  explicit Draw(unsigned seed) : g_(seed) {}
  cplx operator()() { return cplx(nd_(g_), nd_(g_)) * 0.5 + 1.2; }
  KParams kparams() { return {(*this)(), (*this)(), (*this)(), (*this)()}; }
  BoundaryParams boundary() { return {kparams(), kparams()}; }
  ChainConfig chain(const std::vector<int>& two_js) {
    ChainConfig c;
    c.two_js = two_js;
    for (std::size_t i = 0; i < two_js.size(); ++i) c.inhoms.push_back((*this)());
    c.boundary = boundary();
    return c;
  }

 private:
  std::mt19937_64 g_;
  std::normal_distribution<double> nd_;
};

inline const cplx kQ = default_q();

}  // namespace qtt::test
