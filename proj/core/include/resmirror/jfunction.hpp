#pragma once

#include "resmirror/rational.hpp"

#include <vector>

namespace resmirror {

// j = 1/q + sum_d j_d q^(d-1) and log q = -log j + sum_d w_d j^(-d);
// index 0 holds d = 1.
struct JExpansion {
  std::vector<Rational> j;
  std::vector<Rational> w;
};

// j_d from w_d by the ordered-partition sum.
std::vector<Rational> j_from_w(const std::vector<Rational>& w);
// w_d from j_d by power-series reversion.
std::vector<Rational> w_from_j(const std::vector<Rational>& j);

// w_d = w(O_1 O_z)_{0,d} / 2 on P(1,1,1,3), then j_d from them.
JExpansion j_coefficients(int dmax);

}  // namespace resmirror
