#pragma once

#include "fixtures.hpp"
#include "resmirror/series.hpp"

namespace support {

using resmirror::GradedSeries;
using resmirror::Rational;

inline Rational R(const char* s) { return resmirror::parse_rational(s); }

inline GradedSeries expected(const fixtures::SeriesFixture& f, int trunc, const Rational& k = 1) {
  GradedSeries s(trunc);
  s.x1() = k * f.x1_k + R(f.x1_c);
  s.x2() = k * f.x2_k + R(f.x2_c);
  for (const auto& t : f.terms) s.set({t.da, t.db}, R(t.coef));
  return s;
}

inline GradedSeries from_terms(const std::vector<fixtures::Term>& terms, int trunc, int var) {
  GradedSeries s = GradedSeries::variable(var, trunc);
  for (const auto& t : terms) s.set({t.da, t.db}, R(t.coef));
  return s;
}

// Every printed coefficient and the affine part agree.
inline bool agrees_on_printed(const GradedSeries& got, const fixtures::SeriesFixture& f, const Rational& k = 1) {
  if (got.x1() != k * f.x1_k + R(f.x1_c) || got.x2() != k * f.x2_k + R(f.x2_c)) return false;
  for (const auto& t : f.terms)
    if (got.coefficient({t.da, t.db}) != R(t.coef)) return false;
  return true;
}

}  // namespace support
