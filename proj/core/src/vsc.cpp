#include "resmirror/vsc.hpp"

#include "resmirror/errors.hpp"
#include "resmirror/geometry.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace resmirror {

namespace {

// z_j restricted to the plane where r_i = 0 for every i off the knots:
// linear interpolation between the neighbouring knots.
MultiPoly on_knots(int j, const std::vector<int>& knots) {
  for (std::size_t m = 1; m < knots.size(); ++m) {
    const int a = knots[m - 1], b = knots[m];
    if (j == a) return MultiPoly::var(a);
    if (j == b) return MultiPoly::var(b);
    if (a < j && j < b)
      return MultiPoly::var(a) * frac(b - j, b - a) + MultiPoly::var(b) * frac(j - a, b - a);
  }
  throw InvalidComb("index outside the comb");
}

std::vector<int> knots_of(int d, const std::vector<int>& idx) {
  std::vector<int> k{0};
  k.insert(k.end(), idx.begin(), idx.end());
  k.push_back(d);
  return k;
}

std::mutex dec_mutex;
std::map<std::pair<int, std::vector<int>>, MultiPoly> dec_memo;

MultiPoly decompose(int d, const std::vector<int>& idx) {
  {
    std::lock_guard lock(dec_mutex);
    auto it = dec_memo.find({d, idx});
    if (it != dec_memo.end()) return it->second;
  }
  const auto knots = knots_of(d, idx);
  MultiPoly rest(1);
  for (int j = 1; j < d; ++j) rest *= on_knots(j, knots);
  // subtract every proper sub-index-set's contribution
  const std::size_t n = idx.size();
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> sub;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (1u << b)) sub.push_back(idx[b]);
    MultiPoly term = decompose(d, sub);
    for (int i : sub) term *= on_knots(i, knots) * Rational(2) - on_knots(i - 1, knots) - on_knots(i + 1, knots);
    rest -= term;
  }
  for (int i : idx) {
    const MultiPoly r = on_knots(i, knots) * Rational(2) - on_knots(i - 1, knots) - on_knots(i + 1, knots);
    MultiPoly q;
    if (!rest.divide_exact(r, q)) throw Error("decomposition is not exact");
    rest = std::move(q);
  }
  std::lock_guard lock(dec_mutex);
  dec_memo.emplace(std::make_pair(d, idx), rest);
  return rest;
}

std::shared_mutex vsc_mutex;
std::map<std::tuple<int, int, int, int>, Rational> vsc_memo;

Rational initial_value(int k, int n) {
  MultiPoly p(k);
  for (int j = 1; j < k; ++j) p *= MultiPoly::var(0) * Rational(j) + MultiPoly(Rational(k - j));
  for (const auto& [m, c] : p.terms())
    if (m[0] == n) return c;
  return 0;
}

}  // namespace

MultiPoly decomposition_coefficient(int d, const std::vector<int>& indices) {
  if (d < 1 || d + 1 > kMaxVars) throw InvalidComb("degree out of range");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > d - 1) throw InvalidComb("index outside 1..d-1");
    if (i > 0 && indices[i] <= indices[i - 1]) throw InvalidComb("indices must increase strictly");
  }
  return decompose(d, indices);
}

MultiPoly poly_d(int d) {
  if (d < 1 || d + 1 > kMaxVars) throw InvalidDegree("degree out of range");
  MultiPoly knot_form;
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<int> idx;
    for (int i = 1; i < d; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    const auto knots = knots_of(d, idx);
    Rational c = d;
    for (std::size_t m = 1; m < knots.size(); ++m) c /= knots[m] - knots[m - 1];
    MultiPoly t = decompose(d, idx) * c;
    for (int i : idx) t *= MultiPoly::var(i);
    knot_form += t;
  }
  // knot j -> x, y, z_j ordering
  std::vector<MultiPoly::Term> terms;
  for (const auto& [m, c] : knot_form.terms()) {
    Mono out{};
    out[0] = m[0];
    out[1] = m[static_cast<std::size_t>(d)];
    for (int i = 1; i < d; ++i) out[static_cast<std::size_t>(i + 1)] = m[static_cast<std::size_t>(i)];
    terms.emplace_back(out, c);
  }
  return MultiPoly::from_terms(std::move(terms));
}

VarSet poly_d_vars(int d) {
  VarSet vs;
  vs.add("x");
  vs.add("y");
  for (int i = 1; i < d; ++i) vs.add("z" + std::to_string(i));
  return vs;
}

std::vector<long> delta_vector(int N, int k, const std::vector<int>& knots, const std::vector<int>& m) {
  const long l = static_cast<long>(knots.size()) - 1;
  if (l < 1 || m.size() != knots.size()) throw InvalidComb("comb and exponents disagree");
  const long d = knots.back();
  std::vector<long> delta(static_cast<std::size_t>(l));
  for (long p = 1; p <= l; ++p) {
    const long ip = knots[static_cast<std::size_t>(p - 1)];
    long v = (l - d) + (ip - (p - 1)) + ip * (N - k) + m[static_cast<std::size_t>(l)];
    for (long j = p; j <= l - 1; ++j) v += m[static_cast<std::size_t>(j)] - 1;
    delta[static_cast<std::size_t>(p - 1)] = v;
  }
  return delta;
}

Rational vsc_recursive(int N, int k, int d, int n) {
  if (N < 2 || k < 1 || d < 1) throw ValidationError("vsc needs N >= 2, k >= 1, d >= 1");
  if (n < 0 || n > N - 1 - (N - k) * d) return 0;
  if (N >= 2 * k) return d == 1 ? initial_value(k, n) : Rational(0);
  const auto key = std::make_tuple(N, k, d, n);
  {
    std::shared_lock lock(vsc_mutex);
    auto it = vsc_memo.find(key);
    if (it != vsc_memo.end()) return it->second;
  }
  Rational sum = 0;
  const MultiPoly pd = poly_d(d);
  for (const auto& [mono, c] : pd.terms()) {
    std::vector<int> knots{0}, m{mono[0]};
    for (int i = 1; i < d; ++i)
      if (mono[static_cast<std::size_t>(i + 1)] > 0) {
        knots.push_back(i);
        m.push_back(mono[static_cast<std::size_t>(i + 1)]);
      }
    knots.push_back(d);
    m.push_back(mono[1]);
    const auto delta = delta_vector(N, k, knots, m);
    Rational prod = c;
    for (std::size_t p = 1; p < knots.size() && prod != 0; ++p)
      prod *= vsc_recursive(N + 1, k, knots[p] - knots[p - 1], n + static_cast<int>(delta[p - 1]));
    sum += prod;
  }
  std::unique_lock lock(vsc_mutex);
  vsc_memo.emplace(key, sum);
  return sum;
}

Rational vsc_residue(int N, int k, int d, int n) {
  if (N < 2 || k < 1 || d < 1) throw ValidationError("vsc needs N >= 2, k >= 1, d >= 1");
  const GeometrySpec g = cpn(N, k);
  const Insertion a{N - 2 - n, 0}, b{n - 1 + (N - k) * d, 0};
  Rational sum = 0;
  for (const auto& sigma : ordered_partitions(d)) sum += amplitude(g, sigma, a, b);
  return sum * frac(d, k);
}

Rational vsc_contour(int N, int k, int d, int n) {
  if (d < 1 || d > 2) throw InvalidDegree("the single-chain contour form is implemented for d <= 2");
  if (d == 1) return vsc_residue(N, k, 1, n);
  // vertices z0, z1, z2; blocks e(k,1;z_{j-1},z_j)
  auto e1 = [&](VarId a, VarId b) {
    std::vector<Factor> f;
    for (long m = 0; m <= k; ++m)
      f.push_back({MultiPoly::var(a) * Rational(m) + MultiPoly::var(b) * Rational(k - m), 1});
    return f;
  };
  std::vector<Factor> nf = e1(0, 1), second = e1(1, 2), den;
  nf.insert(nf.end(), second.begin(), second.end());
  const int a = N - 2 - n, b = n - 1 + (N - k) * d;
  auto power = [&](VarId v, int e) {
    if (e > 0) nf.push_back({MultiPoly::var(v), e});
    if (e < 0) den.push_back({MultiPoly::var(v), -e});
  };
  power(0, a - N);
  power(2, b - N);
  den.push_back({MultiPoly::var(1), N + 1});
  den.push_back({MultiPoly::var(1) * Rational(2) - MultiPoly::var(0) - MultiPoly::var(2), 1});
  RatFunc f = RatFunc::make(MultiPoly(frac(1, k * k)), std::move(nf), std::move(den));
  ResidueSchedule s;
  s.push_back(simple_step(1, {MultiPoly(), (MultiPoly::var(0) + MultiPoly::var(2)) * frac(1, 2)}));
  s.push_back(simple_step(2, {MultiPoly()}));
  s.push_back(simple_step(0, {MultiPoly()}));
  RatFunc r = iterated_residue(f, s);
  if (!r.is_constant()) throw Error("contour integral left free variables");
  return r.constant_value() * Rational(d);
}

bool Theorem1Report::ok() const {
  for (const auto& r : rows)
    if (!r.agree()) return false;
  return true;
}

Theorem1Report check_theorem1(int N, int k, int d) {
  Theorem1Report rep{N, k, d, {}};
  for (int n = 0; n <= N - 1 - (N - k) * d; ++n) rep.rows.push_back({n, vsc_recursive(N, k, d, n), vsc_residue(N, k, d, n)});
  return rep;
}

}  // namespace resmirror
