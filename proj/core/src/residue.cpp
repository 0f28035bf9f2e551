#include "resmirror/residue.hpp"

#include "resmirror/errors.hpp"

namespace resmirror {

namespace {

using Series = std::vector<MultiPoly>;  // eps^0 .. eps^T

Series mul_trunc(const Series& a, const Series& b, int T) {
  Series c(static_cast<std::size_t>(T) + 1);
  for (int i = 0; i <= T && i < int(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= T && j < int(b.size()); ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

Series pow_trunc(const Series& a, int m, int T) {
  Series r(static_cast<std::size_t>(T) + 1);
  r[0] = MultiPoly(1);
  Series b = a;
  while (m > 0) {
    if (m & 1) r = mul_trunc(r, b, T);
    m >>= 1;
    if (m) b = mul_trunc(b, b, T);
  }
  return r;
}

struct Shifted {
  Series unit;  // coefficients after removing eps^order
  int order = 0;
};

Shifted shift(const MultiPoly& p, VarId v, const MultiPoly& loc) {
  auto cs = p.taylor_shift(v, loc);
  Shifted s;
  while (s.order < int(cs.size()) && cs[s.order].is_zero()) ++s.order;
  if (s.order == int(cs.size())) throw IdenticallySingular("factor vanishes identically on the expansion line");
  s.unit.assign(cs.begin() + s.order, cs.end());
  return s;
}

struct Expansion {
  int low = 0;
  int T = -1;
  Series coeffs;                // polynomial series, eps^0..eps^T after eps^low
  MultiPoly outside_num = MultiPoly(1);
  std::vector<Factor> outside_nf;
  std::vector<Factor> outside_den;  // includes the powers of unit leading terms
};

Expansion expand_core(const RatFunc& r, VarId v, const MultiPoly& loc, int upto) {
  if (loc.involves(v)) throw ValidationError("pole location depends on the integration variable");
  Expansion ex;
  struct Piece {
    Shifted s;
    int mult;
    bool den;
  };
  std::vector<Piece> inside;
  if (r.num().involves(v))
    inside.push_back({shift(r.num(), v, loc), 1, false});
  else
    ex.outside_num = r.num();
  for (const auto& f : r.num_factors()) {
    if (f.poly.involves(v))
      inside.push_back({shift(f.poly, v, loc), f.mult, false});
    else
      ex.outside_nf.push_back(f);
  }
  for (const auto& f : r.den()) {
    if (f.poly.involves(v))
      inside.push_back({shift(f.poly, v, loc), f.mult, true});
    else
      ex.outside_den.push_back(f);
  }
  for (const auto& p : inside) ex.low += (p.den ? -1 : 1) * p.mult * p.s.order;
  ex.T = upto - ex.low;
  if (ex.T < 0) return ex;
  const int T = ex.T;
  Series acc(static_cast<std::size_t>(T) + 1);
  acc[0] = MultiPoly(1);
  for (auto& p : inside) {
    Series u = p.s.unit;
    if (int(u.size()) > T + 1) u.resize(static_cast<std::size_t>(T) + 1);
    const MultiPoly& u0 = u[0];
    if (!p.den) {
      acc = mul_trunc(acc, pow_trunc(u, p.mult, T), T);
    } else if (u0.is_constant()) {
      Rational c = Rational(1) / u0.constant_term();
      Series inv(static_cast<std::size_t>(T) + 1);
      inv[0] = MultiPoly(c);
      for (int n = 1; n <= T; ++n) {
        MultiPoly s;
        for (int i = 1; i <= n && i < int(u.size()); ++i) s += u[i] * inv[n - i];
        inv[n] = s * (-c);
      }
      acc = mul_trunc(acc, pow_trunc(inv, p.mult, T), T);
    } else {
      // 1/u^m = sum_s binom(-m,s) delta^s u0^(-m-s); scale by u0^(m+T)
      Series delta = u;
      delta[0] = MultiPoly();
      Series dpow(static_cast<std::size_t>(T) + 1);
      dpow[0] = MultiPoly(1);
      std::vector<MultiPoly> u0pow(static_cast<std::size_t>(T) + 1);
      u0pow[0] = MultiPoly(1);
      for (int i = 1; i <= T; ++i) u0pow[i] = u0pow[i - 1] * u0;
      Series S(static_cast<std::size_t>(T) + 1);
      for (int s = 0; s <= T; ++s) {
        Rational b = binomial(-p.mult, s);
        for (int i = s; i <= T; ++i)
          if (!dpow[i].is_zero()) S[i] += dpow[i] * u0pow[T - s] * b;
        if (s < T) dpow = mul_trunc(dpow, delta, T);
      }
      acc = mul_trunc(acc, S, T);
      ex.outside_den.push_back({u0, p.mult + T});
    }
  }
  ex.coeffs = std::move(acc);
  return ex;
}

RatFunc assemble(const Expansion& ex, const MultiPoly& c) {
  if (c.is_zero()) return RatFunc();
  std::vector<Factor> nf = ex.outside_nf;
  if (!ex.outside_num.is_constant()) nf.push_back({ex.outside_num, 1});
  MultiPoly n = ex.outside_num.is_constant() ? c * ex.outside_num.constant_term() : c;
  return RatFunc::make(std::move(n), std::move(nf), ex.outside_den).reduce();
}

}  // namespace

RatFunc LaurentSeries::coefficient(int exp) const {
  int i = exp - low;
  if (i < 0 || i >= int(coeffs.size())) return RatFunc();
  return coeffs[i];
}

int pole_order(const RatFunc& r, const PoleSpec& p) {
  int ord = 0;
  for (const auto& f : r.den())
    if (f.poly.involves(p.var)) ord += f.mult * shift(f.poly, p.var, p.location).order;
  return ord;
}

LaurentSeries laurent_expand(const RatFunc& r, const PoleSpec& p, int upto) {
  Expansion ex = expand_core(r, p.var, p.location, upto);
  LaurentSeries out;
  out.low = ex.low;
  for (int i = 0; i <= ex.T; ++i) out.coeffs.push_back(assemble(ex, ex.coeffs[i]));
  return out;
}

RatFunc residue_at(const RatFunc& r, const PoleSpec& p) {
  if (r.is_zero() || !r.involves(p.var)) return RatFunc();
  Expansion ex = expand_core(r, p.var, p.location, -1);
  if (ex.T < 0) return RatFunc();
  return assemble(ex, ex.coeffs[ex.T]);
}

RatFunc residue_sum(const RatFunc& r, const std::vector<PoleSpec>& specs) {
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = i + 1; j < specs.size(); ++j)
      if (specs[i].var == specs[j].var && specs[i].location == specs[j].location)
        throw DuplicatePole("two poles at the same location");
  RatFunc sum;
  for (const auto& p : specs) sum += residue_at(r, p);
  return specs.size() > 1 ? sum.reduce() : sum;
}

ResidueStep simple_step(VarId var, std::vector<MultiPoly> locations, RatFunc measure) {
  ResidueStep s;
  s.var = var;
  for (auto& l : locations) s.poles.push_back({var, std::move(l), 0});
  s.measure = std::move(measure);
  return s;
}

RatFunc iterated_residue(const RatFunc& r, const ResidueSchedule& s) {
  RatFunc cur = r;
  for (const auto& step : s) {
    if (cur.is_zero()) return cur;
    cur *= step.measure;
    for (const auto& [v, e] : step.before) cur = cur.substitute(v, e);
    cur = residue_sum(cur, step.poles);
    for (const auto& [v, e] : step.after) cur = cur.substitute(v, e);
  }
  return cur;
}

}  // namespace resmirror
