#include "resmirror/ratfunc.hpp"

#include "resmirror/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

namespace resmirror {

namespace {

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].first != y[i].first) return x[i].first > y[i].first;
    if (x[i].second != y[i].second) return x[i].second < y[i].second;
  }
  return x.size() < y.size();
}

void merge_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (out > 0 && fs[out - 1].poly == fs[i].poly) {
      fs[out - 1].mult += fs[i].mult;
    } else {
      if (out != i) fs[out] = std::move(fs[i]);
      ++out;
    }
  }
  fs.resize(out);
  std::erase_if(fs, [](const Factor& f) { return f.mult == 0; });
}

MultiPoly expand(const std::vector<Factor>& fs) {
  MultiPoly r(1);
  for (const auto& f : fs) r *= f.poly.pow(f.mult);
  return r;
}

int find_factor(const std::vector<Factor>& fs, const MultiPoly& p) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].poly == p) return static_cast<int>(i);
  return -1;
}

std::mt19937_64& rng() {
  thread_local std::mt19937_64 g(0x5eed);
  return g;
}

// A point on the zero set of a linear-in-some-variable factor; false when no
// variable enters linearly with a constant coefficient.
bool point_on_zero_set(const MultiPoly& f, std::vector<Rational>& pt) {
  pt.assign(kMaxVars, 0);
  for (VarId v = 0; v < kMaxVars; ++v) {
    if (f.degree_in(v) != 1) continue;
    auto cs = f.coefficients_in(v);
    if (!cs[1].is_constant()) continue;
    std::uniform_int_distribution<long> num(-97, 97), den(1, 13);
    for (auto& x : pt) x = frac(num(rng()), den(rng()));
    pt[v] = 0;
    for (auto& x : pt) x.canonicalize();
    pt[v] = -cs[0].evaluate(pt) / cs[1].constant_term();
    return true;
  }
  return false;
}

// Divides p by f as often as possible, up to max_times.
int divide_out(MultiPoly& p, const MultiPoly& f, int max_times) {
  int k = 0;
  std::vector<Rational> pt;
  bool have_pt = point_on_zero_set(f, pt);
  while (k < max_times && !p.is_zero() && !p.is_constant()) {
    if (have_pt && p.evaluate(pt) != 0) break;
    MultiPoly q;
    if (!p.divide_exact(f, q)) break;
    p = std::move(q);
    ++k;
  }
  return k;
}

}  // namespace

RatFunc::RatFunc(const MultiPoly& p) : num_(p) {}

RatFunc RatFunc::make(MultiPoly num, std::vector<Factor> nf, std::vector<Factor> den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.nf_ = std::move(nf);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

RatFunc RatFunc::power_of(const MultiPoly& p, int m) {
  if (m == 0) return RatFunc(1);
  if (m > 0) return make(MultiPoly(1), {{p, m}}, {});
  return make(MultiPoly(1), {}, {{p, -m}});
}

void RatFunc::normalize() {
  for (const auto& f : den_)
    if (f.poly.is_zero()) throw IdenticallySingular("denominator factor vanishes identically");
  for (const auto& f : nf_)
    if (f.poly.is_zero()) num_ = MultiPoly();
  if (num_.is_zero()) {
    nf_.clear();
    den_.clear();
    return;
  }
  Rational scale = 1;
  auto monic = [&](std::vector<Factor>& fs, bool numerator) {
    std::vector<Factor> keep;
    keep.reserve(fs.size());
    for (auto& f : fs) {
      if (f.mult == 0) continue;
      if (f.mult < 0) throw ValidationError("negative factor multiplicity");
      Rational lc = f.poly.leading().second;
      Rational c = resmirror::pow(lc, f.mult);
      if (numerator)
        scale *= c;
      else
        scale /= c;
      if (f.poly.is_constant()) continue;
      if (lc != 1) f.poly *= Rational(1) / lc;
      keep.push_back(std::move(f));
    }
    fs = std::move(keep);
  };
  monic(nf_, true);
  monic(den_, false);
  num_ *= scale;
  merge_factors(nf_);
  merge_factors(den_);
  if (nf_.empty() || den_.empty()) return;
  for (auto& f : nf_) {
    int j = find_factor(den_, f.poly);
    if (j < 0) continue;
    int c = std::min(f.mult, den_[j].mult);
    f.mult -= c;
    den_[j].mult -= c;
  }
  std::erase_if(nf_, [](const Factor& f) { return f.mult == 0; });
  std::erase_if(den_, [](const Factor& f) { return f.mult == 0; });
}

bool RatFunc::is_constant() const { return nf_.empty() && den_.empty() && num_.is_constant(); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw ValidationError("rational function is not a constant");
  return num_.constant_term();
}

bool RatFunc::involves(VarId v) const {
  if (num_.involves(v)) return true;
  for (const auto& f : nf_)
    if (f.poly.involves(v)) return true;
  for (const auto& f : den_)
    if (f.poly.involves(v)) return true;
  return false;
}

MultiPoly RatFunc::expanded_numerator() const { return num_ * expand(nf_); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  std::vector<Factor> nf = a.nf_, den = a.den_;
  nf.insert(nf.end(), b.nf_.begin(), b.nf_.end());
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return RatFunc::make(a.num_ * b.num_, std::move(nf), std::move(den));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Factor> common;
  std::vector<Factor> ra = a.nf_, rb = b.nf_;
  for (auto& f : ra) {
    int j = find_factor(rb, f.poly);
    if (j < 0) continue;
    int c = std::min(f.mult, rb[j].mult);
    common.push_back({f.poly, c});
    f.mult -= c;
    rb[j].mult -= c;
  }
  std::vector<Factor> lcm = a.den_;
  for (const auto& f : b.den_) {
    int j = find_factor(lcm, f.poly);
    if (j < 0)
      lcm.push_back(f);
    else
      lcm[j].mult = std::max(lcm[j].mult, f.mult);
  }
  auto cofactor = [&](const std::vector<Factor>& den) {
    std::vector<Factor> rest;
    for (const auto& f : lcm) {
      int j = find_factor(den, f.poly);
      int m = f.mult - (j < 0 ? 0 : den[j].mult);
      if (m > 0) rest.push_back({f.poly, m});
    }
    return expand(rest);
  };
  MultiPoly sum = a.num_ * expand(ra) * cofactor(a.den_) + b.num_ * expand(rb) * cofactor(b.den_);
  return RatFunc::make(std::move(sum), std::move(common), std::move(lcm));
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  std::vector<Factor> den = nf_;
  if (!num_.is_constant()) den.push_back({num_, 1});
  MultiPoly n = num_.is_constant() ? MultiPoly(Rational(1) / num_.constant_term()) : MultiPoly(1);
  return make(std::move(n), den_, std::move(den));
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

RatFunc RatFunc::substitute(VarId v, const RatFunc& e) const {
  if (!involves(v)) return *this;
  if (e.involves(v)) throw ValidationError("substituted expression contains the variable itself");
  if (e.den_.empty()) {
    MultiPoly ep = e.expanded_numerator();
    std::vector<Factor> nf, den;
    for (const auto& f : nf_) nf.push_back({f.poly.substitute(v, ep), f.mult});
    for (const auto& f : den_) {
      MultiPoly p = f.poly.substitute(v, ep);
      if (p.is_zero()) throw IdenticallySingular("substitution makes a denominator factor vanish");
      den.push_back({std::move(p), f.mult});
    }
    return make(num_.substitute(v, ep), std::move(nf), std::move(den));
  }
  // e = P/Q: a polynomial A of degree D in v becomes A~/Q^D.
  MultiPoly P = e.expanded_numerator();
  MultiPoly Q = expand(e.den_);
  auto homog = [&](const MultiPoly& a, int& D) {
    auto cs = a.coefficients_in(v);
    D = static_cast<int>(cs.size()) - 1;
    MultiPoly r;
    MultiPoly ppow(1);
    std::vector<MultiPoly> qpow(static_cast<std::size_t>(D) + 1);
    qpow[0] = MultiPoly(1);
    for (int i = 1; i <= D; ++i) qpow[i] = qpow[i - 1] * Q;
    for (int i = 0; i <= D; ++i) {
      if (!cs[i].is_zero()) r += cs[i] * ppow * qpow[D - i];
      if (i < D) ppow *= P;
    }
    return r;
  };
  long qexp = 0;
  int D = 0;
  MultiPoly n = homog(num_, D);
  qexp -= D;
  std::vector<Factor> nf, den;
  for (const auto& f : nf_) {
    nf.push_back({homog(f.poly, D), f.mult});
    qexp -= long(D) * f.mult;
  }
  for (const auto& f : den_) {
    MultiPoly p = homog(f.poly, D);
    if (p.is_zero()) throw IdenticallySingular("substitution makes a denominator factor vanish");
    den.push_back({std::move(p), f.mult});
    qexp += long(D) * f.mult;
  }
  for (const auto& f : e.den_) {
    if (qexp > 0) nf.push_back({f.poly, static_cast<int>(f.mult * qexp)});
    if (qexp < 0) den.push_back({f.poly, static_cast<int>(-f.mult * qexp)});
  }
  return make(std::move(n), std::move(nf), std::move(den));
}

Rational RatFunc::evaluate(const std::vector<Rational>& point) const {
  Rational d = 1;
  for (const auto& f : den_) d *= resmirror::pow(f.poly.evaluate(point), f.mult);
  if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
  Rational n = num_.evaluate(point);
  for (const auto& f : nf_) n *= resmirror::pow(f.poly.evaluate(point), f.mult);
  return n / d;
}

RatFunc RatFunc::reduce() const {
  if (den_.empty() || is_zero()) return *this;
  MultiPoly n = num_;
  std::vector<Factor> nf = nf_, den = den_;
  for (auto& f : den) {
    if (!n.is_constant()) f.mult -= divide_out(n, f.poly, f.mult);
    std::vector<Factor> split;
    for (auto& g : nf) {
      if (f.mult == 0) break;
      if (g.mult == 0 || g.poly.total_degree() <= f.poly.total_degree()) continue;
      MultiPoly q;
      if (g.poly.divide_exact(f.poly, q)) {
        // g = f*q, so g^m / f^e loses min(m, e) copies of f
        int c = std::min(g.mult, f.mult);
        if (c < g.mult) split.push_back({g.poly, g.mult - c});
        split.push_back({q, c});
        g.mult = 0;
        f.mult -= c;
      }
    }
    nf.insert(nf.end(), split.begin(), split.end());
  }
  std::erase_if(nf, [](const Factor& g) { return g.mult == 0; });
  return make(std::move(n), std::move(nf), std::move(den));
}

bool RatFunc::equals(const RatFunc& o) const {
  MultiPoly l = expanded_numerator() * expand(o.den_);
  MultiPoly r = o.expanded_numerator() * expand(den_);
  return l == r;
}

std::string RatFunc::str(const VarSet* names) const {
  std::ostringstream os;
  auto paren = [&](const MultiPoly& p) {
    if (p.size() == 1) return p.str(names);
    return "(" + p.str(names) + ")";
  };
  if (nf_.empty()) {
    os << (den_.empty() ? num_.str(names) : paren(num_));
  } else {
    bool unit = num_ == MultiPoly(1);
    if (!unit) os << paren(num_);
    bool first = unit;
    for (const auto& f : nf_) {
      if (!first) os << "*";
      first = false;
      os << paren(f.poly);
      if (f.mult > 1) os << "^" << f.mult;
    }
  }
  if (!den_.empty()) {
    os << "/(";
    bool first = true;
    for (const auto& f : den_) {
      if (!first) os << "*";
      first = false;
      os << paren(f.poly);
      if (f.mult > 1) os << "^" << f.mult;
    }
    os << ")";
  }
  return os.str();
}

std::string RatFunc::to_json() const {
  auto fl = [](const std::vector<Factor>& fs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& f : fs) a.push_back({{"poly", nlohmann::json::parse(f.poly.to_json())}, {"mult", f.mult}});
    return a;
  };
  nlohmann::json j{{"num", nlohmann::json::parse(num_.to_json())}, {"num_factors", fl(nf_)}, {"den", fl(den_)}};
  return j.dump();
}

RatFunc ratfunc_substitute(const RatFunc& r, VarId v, const RatFunc& e) { return r.substitute(v, e); }
RatFunc ratfunc_reduce(const RatFunc& r) { return r.reduce(); }

}  // namespace resmirror
