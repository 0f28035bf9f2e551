#pragma once

#include "resmirror/poly.hpp"

#include <vector>

namespace resmirror {

// f_{(i_1..i_k)} of the decomposition of z_1...z_{d-1} over products of
// r_i = 2z_i - z_{i-1} - z_{i+1}. Variable j is z_j (j = 0..d).
MultiPoly decomposition_coefficient(int d, const std::vector<int>& indices);

// Poly_d in x (var 0), y (var 1) and z_i (var i+1).
MultiPoly poly_d(int d);
VarSet poly_d_vars(int d);

// Shift vector for the comb 0 = knots[0] < ... < knots[l] = d with monomial
// exponents m[j] on the knot variables.
std::vector<long> delta_vector(int N, int k, const std::vector<int>& knots, const std::vector<int>& m);

// Virtual structure constants from the initial condition and recursion.
Rational vsc_recursive(int N, int k, int d, int n);
// The same constants from the ordered-partition residue sum.
Rational vsc_residue(int N, int k, int d, int n);
// Right-hand side of the single-chain contour formula (d <= 2), times d.
Rational vsc_contour(int N, int k, int d, int n);

struct Theorem1Row {
  int n = 0;
  Rational recursive;
  Rational residue;
  bool agree() const { return recursive == residue; }
};

struct Theorem1Report {
  int N = 0, k = 0, d = 0;
  std::vector<Theorem1Row> rows;
  bool ok() const;
};

Theorem1Report check_theorem1(int N, int k, int d);

}  // namespace resmirror
