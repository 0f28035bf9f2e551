#include "resmirror/poly.hpp"

#include "resmirror/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace resmirror {

namespace {

bool term_order(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.first > b.first; }

// Merge a sorted vector with possible duplicate monomials; drop zeros.
void merge_sorted(std::vector<MultiPoly::Term>& t) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(t[i].second);
    while (j < t.size() && t[j].first == t[i].first) {
      c += t[j].second;
      ++j;
    }
    if (c != 0) {
      t[out].first = t[i].first;
      t[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

}  // namespace

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw ValidationError("too many variables");
}

VarId VarSet::add(const std::string& name) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VarId>(i);
  if (names_.size() >= kMaxVars) throw ValidationError("too many variables");
  names_.push_back(name);
  return static_cast<VarId>(names_.size() - 1);
}

VarId VarSet::id(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VarId>(i);
  throw ValidationError("unknown variable " + name);
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 255) throw InvalidExp("exponent overflow");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int mono_degree(const Mono& a) {
  int d = 0;
  for (auto e : a) d += e;
  return d;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Mono{}, c);
}

MultiPoly MultiPoly::var(VarId v, int exp) {
  if (v < 0 || v >= kMaxVars) throw ValidationError("variable index out of range");
  if (exp < 0 || exp > 255) throw InvalidExp("bad exponent");
  Mono m{};
  m[v] = static_cast<std::uint8_t>(exp);
  return monomial(m, 1);
}

MultiPoly MultiPoly::monomial(const Mono& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  merge_sorted(terms);
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono{});
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == Mono{}) return terms_.back().second;
  return 0;
}

int MultiPoly::degree_in(VarId v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.first[v]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.first));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = mono_degree(terms_[0].first);
  for (const auto& t : terms_)
    if (mono_degree(t.first) != d) return false;
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->first > j->first) {
      out.push_back(std::move(*i++));
    } else if (j->first > i->first) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != o.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  std::vector<MultiPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.emplace_back(mono_mul(x.first, y.first), x.second * y.second);
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MultiPoly MultiPoly::pow(long e) const {
  if (e < 0) throw InvalidExp("negative power of a polynomial");
  MultiPoly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!m[i]) continue;
      if (static_cast<std::size_t>(i) >= point.size()) throw ValidationError("evaluation point too short");
      t *= resmirror::pow(point[i], m[i]);
    }
    s += t;
  }
  return s;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto& [m, c] : terms_) {
    Mono r = m;
    int e = r[v];
    r[v] = 0;
    buckets[e].emplace_back(r, c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  // removing one variable keeps the relative order of the rest
  for (auto& b : buckets) {
    MultiPoly p;
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& e) const {
  if (!involves(v)) return *this;
  auto cs = coefficients_in(v);
  // Horner
  MultiPoly r = cs.back();
  for (int i = static_cast<int>(cs.size()) - 2; i >= 0; --i) r = r * e + cs[i];
  return r;
}

std::vector<MultiPoly> MultiPoly::taylor_shift(VarId v, const MultiPoly& loc) const {
  auto cs = coefficients_in(v);
  const int D = static_cast<int>(cs.size()) - 1;
  std::vector<MultiPoly> out(static_cast<std::size_t>(D) + 1);
  if (loc.is_zero()) return cs;
  std::vector<MultiPoly> lp(static_cast<std::size_t>(D) + 1);
  lp[0] = MultiPoly(1);
  for (int i = 1; i <= D; ++i) lp[i] = lp[i - 1] * loc;
  for (int i = 0; i <= D; ++i) {
    if (cs[i].is_zero()) continue;
    for (int s = 0; s <= i; ++s) out[s] += cs[i] * lp[i - s] * binomial(i, s);
  }
  return out;
}

bool MultiPoly::divide_exact(const MultiPoly& d, MultiPoly& quotient) const {
  if (d.is_zero()) throw DivisionByZero("division by zero polynomial");
  if (is_zero()) {
    quotient = MultiPoly();
    return true;
  }
  const auto& [lm, lc] = d.leading();
  if (d.size() == 1) {
    std::vector<Term> q;
    q.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (!mono_divides(lm, m)) return false;
      Mono r;
      for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(m[i] - lm[i]);
      q.emplace_back(r, c / lc);
    }
    quotient.terms_ = std::move(q);  // order preserved by division by a monomial
    return true;
  }
  std::map<Mono, Rational, std::greater<Mono>> rem(terms_.begin(), terms_.end());
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!mono_divides(lm, it->first)) return false;
    Mono qm;
    for (int i = 0; i < kMaxVars; ++i) qm[i] = static_cast<std::uint8_t>(it->first[i] - lm[i]);
    Rational qc = it->second / lc;
    rem.erase(it);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      Mono m = mono_mul(qm, d.terms_[k].first);
      auto [pos, inserted] = rem.try_emplace(m, 0);
      pos->second -= qc * d.terms_[k].second;
      if (pos->second == 0) rem.erase(pos);
    }
    q.emplace_back(qm, std::move(qc));
  }
  quotient.terms_ = std::move(q);  // quotient terms arrive in descending order
  return true;
}

std::string MultiPoly::str(const VarSet* names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool is_one = (a == 1) && m != Mono{};
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (!is_one) os << to_string(a);
    bool need_star = !is_one;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!m[i]) continue;
      if (need_star) os << "*";
      need_star = true;
      if (names && i < names->size())
        os << names->name(i);
      else
        os << "v" << i;
      if (m[i] > 1) os << "^" << int(m[i]);
    }
  }
  return os.str();
}

std::string MultiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    int last = kMaxVars;
    while (last > 0 && m[last - 1] == 0) --last;
    std::vector<int> exps(m.begin(), m.begin() + last);
    terms.push_back({{"coef", to_string(c)}, {"exps", exps}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

MultiPoly MultiPoly::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad polynomial json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ValidationError("polynomial json needs a terms array");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    Mono m{};
    const auto& exps = t.at("exps");
    if (exps.size() > kMaxVars) throw ValidationError("too many exponents");
    for (std::size_t i = 0; i < exps.size(); ++i) {
      int e = exps[i].get<int>();
      if (e < 0 || e > 255) throw InvalidExp("exponent out of range");
      m[i] = static_cast<std::uint8_t>(e);
    }
    terms.emplace_back(m, parse_rational(t.at("coef").get<std::string>()));
  }
  return from_terms(std::move(terms));
}

MultiPoly poly_combine_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_combine_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
MultiPoly poly_combine_pow(const MultiPoly& p, long e) { return p.pow(e); }

}  // namespace resmirror
