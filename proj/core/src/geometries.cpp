#include "resmirror/errors.hpp"
#include "resmirror/geometry.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace resmirror {

namespace {

std::shared_mutex memo_mutex;
std::map<std::string, Rational> memo;

std::string memo_key(const GeometrySpec& g, BiDegree dd, const Insertion& a, const Insertion& b) {
  std::string k = g.name();
  if (g.kind == GeometryKind::cpn) k += "|" + std::to_string(g.N) + "," + std::to_string(g.k);
  return k + "|" + to_string(dd) + "|" + label(a) + "|" + label(b);
}

Rational kf0_cl(int s, int t, const Rational& k) {
  if (s + t != 3) return 0;
  switch (s) {
    case 3: return k;
    case 2: return -k;
    case 1: return k - frac(1, 2);
    default: return frac(1, 2) - k;
  }
}

}  // namespace

std::string GeometrySpec::name() const {
  switch (kind) {
    case GeometryKind::cpn: return "cpn";
    case GeometryKind::kf0: return "kf0";
    case GeometryKind::f3: return "f3";
    case GeometryKind::wp1: return "wp1";
    case GeometryKind::wp2: return "wp2";
    case GeometryKind::wp3: return "wp3";
  }
  return "?";
}

std::vector<Insertion> GeometrySpec::basis() const {
  std::vector<Insertion> out;
  switch (kind) {
    case GeometryKind::cpn:
      for (int a = 0; a <= N - 2; ++a) out.push_back({a, 0});
      break;
    case GeometryKind::kf0: out = {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; break;
    case GeometryKind::f3: out = {{0, 0}, {1, 0}, {0, 1}, {0, 2}}; break;
    case GeometryKind::wp1:
    case GeometryKind::wp3:
      for (int s = 0; s <= 1; ++s)
        for (int t = 0; t <= 3; ++t) out.push_back({s, t});
      break;
    case GeometryKind::wp2: out = {{0, 0}, {1, 0}, {2, 0}, {3, 0}}; break;
  }
  return out;
}

bool GeometrySpec::in_basis(const Insertion& ins) const {
  for (const auto& b : basis())
    if (b == ins) return true;
  return false;
}

GeometrySpec make_geometry(const std::string& name, int N, int k, Rational ring_k) {
  GeometrySpec g;
  if (name == "cpn") {
    if (N < 2 || k < 1) throw ValidationError("cpn needs N >= 2 and k >= 1");
    g.kind = GeometryKind::cpn;
  } else if (name == "kf0") {
    g.kind = GeometryKind::kf0;
  } else if (name == "f3") {
    g.kind = GeometryKind::f3;
  } else if (name == "wp1") {
    g.kind = GeometryKind::wp1;
  } else if (name == "wp2") {
    g.kind = GeometryKind::wp2;
  } else if (name == "wp3") {
    g.kind = GeometryKind::wp3;
  } else {
    throw ValidationError("unknown geometry: " + name);
  }
  g.N = N;
  g.k = k;
  g.ring_k = std::move(ring_k);
  return g;
}

GeometrySpec cpn(int N, int k) { return make_geometry("cpn", N, k); }

Rational amplitude(const GeometrySpec& g, const BiPartition& sigma, const Insertion& a, const Insertion& b) {
  ChainProgram pr = chain_program(g, sigma, a, b);
  RatFunc r = iterated_residue(pr.integrand, pr.schedule);
  if (!r.is_constant()) throw Error("residue schedule left free variables: " + r.str(&pr.vars));
  return r.constant_value() * pr.scale;
}

Rational amplitude(const GeometrySpec& g, const OrderedPartition& sigma, const Insertion& a, const Insertion& b) {
  BiPartition bp;
  for (int d : sigma) bp.push_back({d, 0});
  return amplitude(g, bp, a, b);
}

bool selection_rule(const GeometrySpec& g, BiDegree dd, const Insertion& a, const Insertion& b) {
  const int deg = a.degree() + b.degree();
  switch (g.kind) {
    case GeometryKind::cpn: return deg == g.N - 3 + (g.N - g.k) * dd.da;
    case GeometryKind::kf0: return deg == 2;
    case GeometryKind::f3: return deg == 1 - dd.da + 2 * dd.db;
    case GeometryKind::wp1:
    case GeometryKind::wp3: return deg == 2;
    case GeometryKind::wp2: return deg == 1;
  }
  return false;
}

Rational two_point(const GeometrySpec& g, BiDegree dd, const Insertion& a, const Insertion& b) {
  if (!g.in_basis(a)) throw InvalidInsertion(label(a) + " is not an insertion of " + g.name());
  if (!g.in_basis(b)) throw InvalidInsertion(label(b) + " is not an insertion of " + g.name());
  if (!g.two_forms() && dd.db != 0) throw InvalidDegree(g.name() + " takes a single degree");
  const std::string key = memo_key(g, dd, a, b);
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Rational sum = 0;
  for (const auto& sigma : ordered_bipartitions(dd)) sum += amplitude(g, sigma, a, b);
  std::unique_lock lock(memo_mutex);
  memo.emplace(key, sum);
  return sum;
}

Rational two_point_cpn(int N, int k, int d, int a, int b) {
  GeometrySpec g = make_geometry("cpn", N, k);
  if (a < 0 || b < 0 || a > N - 2 || b > N - 2) throw InvalidInsertion("cpn insertions must lie in 0..N-2");
  return two_point(g, {d, 0}, {a, 0}, {b, 0});
}

Rational two_point_kf0(BiDegree dd, const Insertion& a, const Insertion& b) {
  return two_point(make_geometry("kf0"), dd, a, b);
}

Rational two_point_f3(BiDegree dd, const Insertion& a, const Insertion& b) {
  return two_point(make_geometry("f3"), dd, a, b);
}

Rational two_point_wp1(BiDegree dd, const Insertion& a, const Insertion& b) {
  return two_point(make_geometry("wp1"), dd, a, b);
}

Rational two_point_wp2(int d, int a, int b) {
  return two_point(make_geometry("wp2"), {d, 0}, {a, 0}, {b, 0});
}

Rational two_point_wp3(BiDegree dd, const Insertion& a, const Insertion& b) {
  return two_point(make_geometry("wp3"), dd, a, b);
}

Rational classical_triple(const GeometrySpec& g, const Insertion& a, const Insertion& b, const Insertion& c) {
  const int s = a.s + b.s + c.s, t = a.t + b.t + c.t;
  if (g.kind == GeometryKind::kf0) return kf0_cl(s, t, g.ring_k);
  const VarId z = 0, w = 1;
  MultiPoly mono = MultiPoly::var(z, s) * MultiPoly::var(w, t);
  ResidueSchedule sch;
  RatFunc f(mono);
  MultiPoly Z = MultiPoly::var(z), W = MultiPoly::var(w);
  switch (g.kind) {
    case GeometryKind::cpn:
      if (t) return 0;
      f *= RatFunc(Z * Rational(g.k));
      sch.push_back(simple_step(z, {MultiPoly()}, RatFunc::power_of(Z, -g.N)));
      break;
    case GeometryKind::wp2:
      if (t) return 0;
      f *= RatFunc(Z * Rational(2));  // 6z times the 1/3 orbifold factor
      sch.push_back(simple_step(z, {MultiPoly()}, RatFunc::power_of(Z, -4)));
      break;
    case GeometryKind::f3:
      sch.push_back(simple_step(w, {MultiPoly(), Z * Rational(3)},
                                RatFunc::power_of(W, -1) * RatFunc::power_of(W - Z * Rational(3), -1)));
      sch.push_back(simple_step(z, {MultiPoly()}, RatFunc::power_of(Z, -2)));
      break;
    case GeometryKind::wp1:
    case GeometryKind::wp3:
      f *= RatFunc(W * Rational(g.kind == GeometryKind::wp1 ? 4 : 2));  // 6w/3 for wp3
      sch.push_back(simple_step(w, {MultiPoly(), Z * Rational(2)},
                                RatFunc::power_of(W, -3) * RatFunc::power_of(W - Z * Rational(2), -1)));
      sch.push_back(simple_step(z, {MultiPoly()}, RatFunc::power_of(Z, -2)));
      break;
    case GeometryKind::kf0: break;
  }
  RatFunc r = iterated_residue(f, sch);
  return r.is_zero() ? Rational(0) : r.constant_value();
}

int ClassicalPairing::index(const Insertion& ins) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == ins) return static_cast<int>(i);
  return -1;
}

Rational ClassicalPairing::inv(const Insertion& a, const Insertion& b) const {
  int i = index(a), j = index(b);
  if (i < 0 || j < 0) return 0;
  return eta_inv[i][j];
}

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw SingularMetric("classical pairing is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

ClassicalPairing classical_pairing(const GeometrySpec& g) {
  ClassicalPairing p;
  switch (g.kind) {
    case GeometryKind::cpn:
      for (int a = 0; a <= g.N - 2; ++a) p.basis.push_back({a, 0});
      break;
    case GeometryKind::kf0: p.basis = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}}; break;
    case GeometryKind::f3: p.basis = {{0, 0}, {1, 0}, {0, 1}, {0, 2}}; break;
    case GeometryKind::wp1:
    case GeometryKind::wp3: p.basis = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}; break;
    case GeometryKind::wp2: p.basis = {{0, 0}, {1, 0}, {2, 0}}; break;
  }
  const std::size_t n = p.basis.size();
  p.eta.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.eta[i][j] = classical_triple(g, {}, p.basis[i], p.basis[j]);
  p.eta_inv = invert_matrix(p.eta);
  return p;
}

}  // namespace resmirror
