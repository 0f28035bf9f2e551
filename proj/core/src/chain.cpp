// Integrands and residue schedules for the fixed-point components of each
// geometry. Vertex j carries z_j (and w_j for two-form targets).
#include "resmirror/errors.hpp"
#include "resmirror/geometry.hpp"

namespace resmirror {

namespace {

struct LinTerm {
  VarId v;
  Rational c;
};

MultiPoly lin(std::initializer_list<LinTerm> ts) {
  MultiPoly p;
  for (const auto& t : ts) p += MultiPoly::var(t.v) * t.c;
  return p;
}

Rational q(long n, long d = 1) { return frac(n, d); }

// Accumulates an integrand as lazily multiplied factors.
struct Builder {
  Rational c = 1;
  std::vector<Factor> nf, den;
  void mul(const MultiPoly& p, int m = 1) { nf.push_back({p, m}); }
  void div(const MultiPoly& p, int m = 1) { den.push_back({p, m}); }
  RatFunc build() { return RatFunc::make(MultiPoly(c), std::move(nf), std::move(den)); }
};

RatFunc measure(const MultiPoly& p, int m, Rational c = 1) { return RatFunc::power_of(p, -m) * RatFunc(c); }

struct Layout {
  int l;
  VarId z(int j) const { return j; }
  VarId w(int j) const { return l + 1 + j; }
};

VarSet names_for(int l, bool two) {
  VarSet vs;
  for (int j = 0; j <= l; ++j) vs.add("z" + std::to_string(j));
  if (two)
    for (int j = 0; j <= l; ++j) vs.add("w" + std::to_string(j));
  return vs;
}

// Negative exponents are allowed; the vsc residue formula needs them.
void power(Builder& b, VarId v, int e) {
  if (e > 0) b.mul(MultiPoly::var(v), e);
  if (e < 0) b.div(MultiPoly::var(v), -e);
}

void insert_ev(Builder& b, const Layout& L, const Insertion& a, const Insertion& e, bool two) {
  power(b, L.z(0), a.s);
  power(b, L.z(L.l), e.s);
  if (two) {
    power(b, L.w(0), a.t);
    power(b, L.w(L.l), e.t);
  }
}

// (j*x0 + (n-j)*x1)/d
MultiPoly interp(VarId x0, VarId x1, long j, long n, long d) { return lin({{x0, q(j, d)}, {x1, q(n - j, d)}}); }

ChainProgram cpn_chain(const GeometrySpec& g, const std::vector<int>& parts, const Insertion& a, const Insertion& e) {
  const int l = static_cast<int>(parts.size());
  Layout L{l};
  ChainProgram pr;
  pr.vars = names_for(l, false);
  Builder b;
  for (int j = 1; j <= l; ++j) {
    const int d = parts[j - 1];
    for (long m = 0; m <= long(g.k) * d; ++m) b.mul(interp(L.z(j - 1), L.z(j), m, long(g.k) * d, d));
    for (long i = 1; i < d; ++i) b.div(interp(L.z(j - 1), L.z(j), i, d, d), g.N);
    pr.scale /= d;
  }
  for (int j = 1; j < l; ++j) {
    const int d1 = parts[j - 1], d2 = parts[j];
    b.div(lin({{L.z(j), q(1, d1) + q(1, d2)}, {L.z(j - 1), -q(1, d1)}, {L.z(j + 1), -q(1, d2)}}));
    b.div(MultiPoly::var(L.z(j)) * Rational(g.k));
  }
  insert_ev(b, L, a, e, false);
  pr.integrand = b.build();
  for (int j = l; j >= 0; --j) pr.schedule.push_back(simple_step(L.z(j), {MultiPoly()}, measure(MultiPoly::var(L.z(j)), g.N)));
  return pr;
}

ChainProgram wp2_chain(const std::vector<int>& parts, const Insertion& a, const Insertion& e) {
  const int l = static_cast<int>(parts.size());
  Layout L{l};
  ChainProgram pr;
  pr.vars = names_for(l, false);
  Builder b;
  for (int j = 1; j <= l; ++j) {
    const long d = parts[j - 1];
    const VarId z0 = L.z(j - 1), z1 = L.z(j);
    for (long m = 0; m <= 6 * d; ++m) b.mul(interp(z0, z1, m, 6 * d, d));
    for (long i = 1; i < d; ++i) b.div(interp(z0, z1, i, d, d), 3);
    for (long i = 1; i < 3 * d; ++i) b.div(interp(z0, z1, i, 3 * d, d));
    pr.scale /= d;
  }
  for (int j = 1; j < l; ++j) {
    const int d1 = parts[j - 1], d2 = parts[j];
    b.c /= 6;
    b.div(MultiPoly::var(L.z(j)));
    b.div(lin({{L.z(j), q(1, d1) + q(1, d2)}, {L.z(j - 1), -q(1, d1)}, {L.z(j + 1), -q(1, d2)}}));
  }
  insert_ev(b, L, a, e, false);
  pr.integrand = b.build();
  for (int j = 0; j <= l; ++j)
    pr.schedule.push_back(simple_step(L.z(j), {MultiPoly()}, measure(MultiPoly::var(L.z(j)), 4, q(1, 3))));
  return pr;
}

// Node denominator X1 + X2 at vertex j between parts p1 and p2.
MultiPoly node_form(const Layout& L, int j, const BiDegree& p1, const BiDegree& p2) {
  const Rational i1 = q(1, p1.size()), i2 = q(1, p2.size());
  MultiPoly x1 = p1.is_a() ? lin({{L.z(j), i1}, {L.z(j - 1), -i1}}) : lin({{L.w(j), i1}, {L.w(j - 1), -i1}});
  MultiPoly x2 = p2.is_a() ? lin({{L.z(j), i2}, {L.z(j + 1), -i2}}) : lin({{L.w(j), i2}, {L.w(j + 1), -i2}});
  return x1 + x2;
}

ChainProgram kf0_chain(const BiPartition& parts, const Insertion& a, const Insertion& e) {
  const int l = static_cast<int>(parts.size());
  Layout L{l};
  ChainProgram pr;
  pr.vars = names_for(l, true);
  Builder b;
  for (int j = 1; j <= l; ++j) {
    const BiDegree& p = parts[j - 1];
    const long d = p.size();
    // the (0,d) block is the (d,0) block with z and w exchanged
    const VarId x0 = p.is_a() ? L.z(j - 1) : L.w(j - 1), x1 = p.is_a() ? L.z(j) : L.w(j);
    const VarId y0 = p.is_a() ? L.w(j - 1) : L.z(j - 1);
    for (long i = 1; i < 2 * d; ++i) b.mul(lin({{x0, q(-i, d)}, {x1, q(-(2 * d - i), d)}, {y0, -2}}));
    for (long i = 1; i < d; ++i) b.div(interp(x0, x1, i, d, d), 2);
    pr.scale /= d;
  }
  for (int j = 1; j < l; ++j) {
    b.mul(lin({{L.z(j), -2}, {L.w(j), -2}}));
    b.div(node_form(L, j, parts[j - 1], parts[j]));
  }
  insert_ev(b, L, a, e, true);
  pr.integrand = b.build();
  const MultiPoly zero;
  for (int j = 0; j < l; ++j) {
    if (parts[j].is_a()) {
      ResidueStep s = simple_step(L.z(j), {zero}, measure(MultiPoly::var(L.z(j)), 2));
      s.after.push_back({L.w(j), RatFunc(MultiPoly::var(L.w(j + 1)))});
      pr.schedule.push_back(std::move(s));
    } else {
      ResidueStep s = simple_step(L.w(j), {zero}, measure(MultiPoly::var(L.w(j)), 2));
      s.before.push_back({L.z(j), RatFunc(MultiPoly::var(L.z(j + 1)))});
      pr.schedule.push_back(std::move(s));
    }
  }
  pr.schedule.push_back(simple_step(L.w(l), {zero}, measure(MultiPoly::var(L.w(l)), 2)));
  pr.schedule.push_back(simple_step(L.z(l), {zero}, measure(MultiPoly::var(L.z(l)), 2)));
  return pr;
}

// F3, WP1 and WP3 share the shape of their vertex rules; they differ in the
// fiber measure and in the block/node factors.
struct FiberRules {
  int shift;          // the fiber divisor is w - shift*z
  int wpow;           // power of w in the fiber measure
  Rational wscale;    // constant in front of every w-integration
};

RatFunc fiber_measure(const Layout& L, int j, const FiberRules& r, bool with_shift) {
  RatFunc m = measure(MultiPoly::var(L.w(j)), r.wpow, r.wscale);
  if (with_shift) m *= measure(lin({{L.w(j), 1}, {L.z(j), -r.shift}}), 1);
  return m;
}

std::vector<MultiPoly> fiber_poles(const Layout& L, int j, const FiberRules& r, bool both) {
  std::vector<MultiPoly> p{MultiPoly()};
  if (both) p.push_back(MultiPoly::var(L.z(j)) * Rational(r.shift));
  return p;
}

ResidueSchedule fiber_schedule(const Layout& L, const BiPartition& parts, const FiberRules& r, bool ab_both_poles) {
  ResidueSchedule sch;
  const int l = L.l;
  const MultiPoly zero;
  for (int j = 0; j < l; ++j) {
    const BiDegree& next = parts[j];
    if (next.is_a()) {
      ResidueStep s = simple_step(L.z(j), {zero}, measure(MultiPoly::var(L.z(j)), 2));
      s.before.push_back({L.w(j), RatFunc(MultiPoly::var(L.w(j + 1)))});
      sch.push_back(std::move(s));
      continue;
    }
    const bool cur_b = j == 0 || !parts[j - 1].is_a();
    ResidueStep s;
    if (cur_b)
      s = simple_step(L.w(j), fiber_poles(L, j, r, true), fiber_measure(L, j, r, true));
    else
      s = simple_step(L.w(j), fiber_poles(L, j, r, ab_both_poles), fiber_measure(L, j, r, false));
    s.after.push_back({L.z(j), RatFunc(MultiPoly::var(L.z(j + 1)))});
    sch.push_back(std::move(s));
  }
  if (parts[l - 1].is_a())
    sch.push_back(simple_step(L.w(l), fiber_poles(L, l, r, ab_both_poles), fiber_measure(L, l, r, false)));
  else
    sch.push_back(simple_step(L.w(l), fiber_poles(L, l, r, true), fiber_measure(L, l, r, true)));
  sch.push_back(simple_step(L.z(l), {zero}, measure(MultiPoly::var(L.z(l)), 2)));
  return sch;
}

ChainProgram f3_chain(const BiPartition& parts, const Insertion& a, const Insertion& e) {
  const int l = static_cast<int>(parts.size());
  Layout L{l};
  ChainProgram pr;
  pr.vars = names_for(l, true);
  Builder b;
  for (int j = 1; j <= l; ++j) {
    const BiDegree& p = parts[j - 1];
    const long d = p.size();
    const VarId z0 = L.z(j - 1), z1 = L.z(j), w0 = L.w(j - 1), w1 = L.w(j);
    if (p.is_a()) {
      for (long i = 1; i < 3 * d; ++i) b.mul(lin({{z0, q(-i, d)}, {z1, q(-(3 * d - i), d)}, {w0, 1}}));
      for (long i = 1; i < d; ++i) b.div(interp(z0, z1, i, d, d), 2);
    } else {
      for (long i = 1; i < d; ++i) {
        MultiPoly W = interp(w0, w1, i, d, d);
        b.div(W - MultiPoly::var(z0) * Rational(3));
        b.div(W);
      }
    }
    pr.scale /= d;
  }
  for (int j = 1; j < l; ++j) {
    if (parts[j - 1].is_a() && parts[j].is_a()) b.mul(lin({{L.z(j), -3}, {L.w(j), 1}}));
    b.div(node_form(L, j, parts[j - 1], parts[j]));
  }
  insert_ev(b, L, a, e, true);
  pr.integrand = b.build();
  pr.schedule = fiber_schedule(L, parts, {3, 1, 1}, false);
  return pr;
}

// WP1 (c = 4, fiber weights w,w,w,w-2z) and WP3 (c = 6, an extra weight-3
// fiber coordinate).
ChainProgram wp_chain(const BiPartition& parts, const Insertion& a, const Insertion& e, bool wp3) {
  const int l = static_cast<int>(parts.size());
  const long c = wp3 ? 6 : 4;
  Layout L{l};
  ChainProgram pr;
  pr.vars = names_for(l, true);
  Builder b;
  for (int j = 1; j <= l; ++j) {
    const BiDegree& p = parts[j - 1];
    const long d = p.size();
    const VarId z0 = L.z(j - 1), z1 = L.z(j), w0 = L.w(j - 1), w1 = L.w(j);
    if (p.is_a()) {
      b.c *= c;
      b.mul(MultiPoly::var(w0));
      for (long i = 1; i < 2 * d; ++i) b.mul(lin({{z0, q(-i, d)}, {z1, q(-(2 * d - i), d)}, {w0, 1}}));
      for (long i = 1; i < d; ++i) b.div(interp(z0, z1, i, d, d), 2);
    } else {
      for (long i = 0; i <= c * d; ++i) b.mul(interp(w0, w1, i, c * d, d));
      for (long i = 1; i < d; ++i) {
        MultiPoly W = interp(w0, w1, i, d, d);
        b.div(W, wp3 ? 2 : 3);
        b.div(W - MultiPoly::var(z0) * Rational(2));
      }
      if (wp3)
        for (long i = 1; i < 3 * d; ++i) b.div(interp(w0, w1, i, 3 * d, d));
    }
    pr.scale /= d;
  }
  for (int j = 1; j < l; ++j) {
    if (parts[j - 1].is_a() && parts[j].is_a()) b.mul(lin({{L.z(j), -2}, {L.w(j), 1}}));
    b.c /= c;
    b.div(MultiPoly::var(L.w(j)));
    b.div(node_form(L, j, parts[j - 1], parts[j]));
  }
  insert_ev(b, L, a, e, true);
  pr.integrand = b.build();
  pr.schedule = fiber_schedule(L, parts, {2, 3, wp3 ? q(1, 3) : q(1)}, true);
  return pr;
}

std::vector<int> flat_parts(const BiPartition& sigma) {
  std::vector<int> p;
  for (const auto& d : sigma) {
    if (d.db != 0) throw InvalidDegree("one-form geometry given a (0,d) part");
    p.push_back(d.da);
  }
  return p;
}

}  // namespace

ChainProgram chain_program(const GeometrySpec& g, const BiPartition& sigma, const Insertion& a, const Insertion& b) {
  if (sigma.empty()) throw InvalidDegree("empty partition");
  for (const auto& p : sigma)
    if (p.da < 0 || p.db < 0 || (p.da > 0) == (p.db > 0)) throw InvalidDegree("parts must be (d,0) or (0,d) with d > 0");
  const int vertices = static_cast<int>(sigma.size()) + 1;
  if (vertices * (g.two_forms() ? 2 : 1) > kMaxVars) throw InvalidDegree("chain too long for the variable budget");
  switch (g.kind) {
    case GeometryKind::cpn: return cpn_chain(g, flat_parts(sigma), a, b);
    case GeometryKind::wp2: return wp2_chain(flat_parts(sigma), a, b);
    case GeometryKind::kf0: return kf0_chain(sigma, a, b);
    case GeometryKind::f3: return f3_chain(sigma, a, b);
    case GeometryKind::wp1: return wp_chain(sigma, a, b, false);
    case GeometryKind::wp3: return wp_chain(sigma, a, b, true);
  }
  throw ValidationError("unknown geometry");
}

}  // namespace resmirror
