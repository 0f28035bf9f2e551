#include "resmirror/series.hpp"

#include "resmirror/errors.hpp"
#include "resmirror/vsc.hpp"

#include <json.hpp>

#include <sstream>

namespace resmirror {

namespace {

BiDegree plus(BiDegree a, BiDegree b) { return {a.da + b.da, a.db + b.db}; }

// Multiplies by exp(d . x) and drops what falls past the truncation.
GradedSeries shifted(const GradedSeries& s, BiDegree d) {
  GradedSeries out(s.trunc(), s.box());
  if (s.c() != 0) out.add(d, s.c());
  for (const auto& [e, v] : s.terms()) out.add(plus(e, d), v);
  return out;
}

int check_trunc(const GradedSeries& a, const GradedSeries& b) {
  if (a.trunc() != b.trunc() || a.box() != b.box()) throw ValidationError("series truncations differ");
  return a.trunc();
}

}  // namespace

GradedSeries GradedSeries::variable(int i, int trunc) {
  GradedSeries s(trunc);
  (i == 0 ? s.x1_ : s.x2_) = 1;
  return s;
}

GradedSeries GradedSeries::constant(const Rational& c, int trunc) {
  GradedSeries s(trunc);
  s.c_ = c;
  return s;
}

bool GradedSeries::keeps(BiDegree d) const {
  if (d.da < 0 || d.db < 0 || d.total() == 0) return false;
  return box_ ? (d.da <= trunc_ && d.db <= trunc_) : d.total() <= trunc_;
}

Rational GradedSeries::coefficient(BiDegree d) const {
  if (d.total() == 0) return c_;
  auto it = q_.find(d);
  return it == q_.end() ? Rational(0) : it->second;
}

void GradedSeries::set(BiDegree d, const Rational& v) {
  if (d.total() == 0) {
    c_ = v;
    return;
  }
  if (!keeps(d)) return;
  if (v == 0)
    q_.erase(d);
  else
    q_[d] = v;
}

void GradedSeries::add(BiDegree d, const Rational& v) {
  if (v == 0) return;
  set(d, coefficient(d) + v);
}

GradedSeries GradedSeries::quantum() const {
  GradedSeries s(trunc_, box_);
  s.q_ = q_;
  return s;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  check_trunc(*this, o);
  x1_ += o.x1_;
  x2_ += o.x2_;
  c_ += o.c_;
  for (const auto& [d, v] : o.q_) add(d, v);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) { return *this += o * Rational(-1); }

GradedSeries& GradedSeries::operator*=(const Rational& s) {
  x1_ *= s;
  x2_ *= s;
  c_ *= s;
  if (s == 0) q_.clear();
  for (auto& [d, v] : q_) v *= s;
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  check_trunc(a, b);
  if (a.has_log() && !(b.q_.empty() && !b.has_log())) throw ValidationError("product with a logarithmic part");
  if (b.has_log() && !(a.q_.empty() && !a.has_log())) throw ValidationError("product with a logarithmic part");
  if (a.has_log()) return a * b.c_;
  if (b.has_log()) return b * a.c_;
  GradedSeries out(a.trunc_, a.box_);
  out.c_ = a.c_ * b.c_;
  for (const auto& [d, v] : b.q_) out.add(d, a.c_ * v);
  for (const auto& [d, v] : a.q_) {
    out.add(d, v * b.c_);
    for (const auto& [e, w] : b.q_) out.add(plus(d, e), v * w);
  }
  return out;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
  return a.trunc_ == b.trunc_ && a.box_ == b.box_ && a.x1_ == b.x1_ && a.x2_ == b.x2_ && a.c_ == b.c_ && a.q_ == b.q_;
}

std::string GradedSeries::str(const std::string& v1, const std::string& v2) const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const Rational& c, const std::string& mono) {
    if (c == 0) return;
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (mono.empty())
      os << to_string(a);
    else if (a != 1)
      os << to_string(a) << "*" << mono;
    else
      os << mono;
    first = false;
  };
  put(x1_, v1);
  put(x2_, v2);
  put(c_, "");
  const std::string e1 = "q" + v1.substr(v1.size() - 1), e2 = "q" + v2.substr(v2.size() - 1);
  for (const auto& [d, v] : q_) {
    std::string m;
    if (d.da) m += d.da == 1 ? e1 : e1 + "^" + std::to_string(d.da);
    if (d.db) m += (m.empty() ? "" : "*") + (d.db == 1 ? e2 : e2 + "^" + std::to_string(d.db));
    put(v, m);
  }
  if (first) os << "0";
  return os.str();
}

std::string GradedSeries::to_json() const {
  nlohmann::json j;
  j["affine"] = {{"x1", to_string(x1_)}, {"x2", to_string(x2_)}, {"const", to_string(c_)}};
  j["terms"] = nlohmann::json::array();
  for (const auto& [d, v] : q_) j["terms"].push_back({{"d", {d.da, d.db}}, {"coef", to_string(v)}});
  j["trunc"] = trunc_;
  if (box_) j["box"] = true;
  return j.dump();
}

GradedSeries GradedSeries::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    GradedSeries s(j.at("trunc").get<int>(), j.value("box", false));
    const auto& a = j.at("affine");
    s.x1_ = parse_rational(a.at("x1").get<std::string>());
    s.x2_ = parse_rational(a.at("x2").get<std::string>());
    s.c_ = parse_rational(a.at("const").get<std::string>());
    for (const auto& t : j.at("terms")) {
      const auto& d = t.at("d");
      s.set({d.at(0).get<int>(), d.at(1).get<int>()}, parse_rational(t.at("coef").get<std::string>()));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad series json: ") + e.what());
  }
}

GradedSeries exp_of_pure_q(const GradedSeries& s) {
  if (!s.pure_q()) throw InvalidExp("exp of a series with an affine part");
  GradedSeries out = GradedSeries::constant(1, s.trunc());
  GradedSeries term = out;
  const int max_power = s.box() ? 2 * s.trunc() : s.trunc();
  for (int n = 1; n <= max_power; ++n) {
    term = term * s * frac(1, n);
    if (term.terms().empty()) break;
    out += term;
  }
  return out;
}

GradedSeries reciprocal(const GradedSeries& s) {
  if (s.has_log() || s.c() == 0) throw DivisionByZero("reciprocal needs a nonzero constant term");
  const Rational inv_c = 1 / s.c();
  GradedSeries u = s.quantum() * -inv_c;  // 1/s = (1/c) sum u^n
  GradedSeries out = GradedSeries::constant(1, s.trunc());
  GradedSeries term = out;
  const int max_power = s.box() ? 2 * s.trunc() : s.trunc();
  for (int n = 1; n <= max_power; ++n) {
    term = term * u;
    if (term.terms().empty()) break;
    out += term;
  }
  return out * inv_c;
}

GradedSeries build_generating_function(const GeometrySpec& g, const Insertion& a, const Insertion& b, int D,
                                       const TwoPointFn& tp) {
  if (D < 1) throw InvalidDegree("truncation must be at least 1");
  GradedSeries s(D);
  s.x1() = classical_triple(g, a, b, {1, 0});
  if (g.two_forms()) s.x2() = classical_triple(g, a, b, {0, 1});
  // classes outside the two-point basis are virtual: no quantum part
  if (g.kind == GeometryKind::kf0 && !(g.in_basis(a) && g.in_basis(b))) return s;
  for (int da = 0; da <= D; ++da)
    for (int db = 0; db <= (g.two_forms() ? D : 0); ++db) {
      const BiDegree d{da, db};
      if (!s.keeps(d) || !selection_rule(g, d, a, b)) continue;
      s.set(d, tp(g, d, a, b));
    }
  return s;
}

MirrorMap mirror_map(const GeometrySpec& g, int D, const TwoPointFn& tp) {
  const ClassicalPairing P = classical_pairing(g);
  std::vector<Insertion> forms{{1, 0}};
  if (g.two_forms()) forms.push_back({0, 1});
  MirrorMap m;
  for (const auto& f : forms) {
    GradedSeries t(D);
    for (const auto& alpha : P.basis) {
      const Rational e = P.inv(f, alpha);
      if (e != 0) t += build_generating_function(g, alpha, {0, 0}, D, tp) * e;
    }
    m.t.push_back(std::move(t));
  }
  return m;
}

GradedSeries compose(const GradedSeries& F, const std::vector<GradedSeries>& X) {
  if (X.empty() || X.size() > 2) throw ValidationError("compose takes one or two coordinate series");
  std::vector<GradedSeries> g;
  for (std::size_t i = 0; i < X.size(); ++i) {
    check_trunc(F, X[i]);
    if (X[i].x1() != (i == 0 ? 1 : 0) || X[i].x2() != (i == 1 ? 1 : 0) || X[i].c() != 0)
      throw InvalidExp("coordinate series must be t_i plus exponential terms");
    g.push_back(X[i].quantum());
  }
  if (g.size() == 1) {
    if (F.x2() != 0) throw ValidationError("series uses x2 but only x1 is substituted");
    g.emplace_back(F.trunc(), F.box());
  }
  GradedSeries out(F.trunc(), F.box());
  out.x1() = F.x1();
  out.x2() = F.x2();
  out.c() = F.c();
  out += g[0] * F.x1();
  out += g[1] * F.x2();
  for (const auto& [d, v] : F.terms()) {
    GradedSeries arg = g[0] * Rational(d.da) + g[1] * Rational(d.db);
    out += shifted(exp_of_pure_q(arg), d) * v;
  }
  return out;
}

void invert_mirror_map(MirrorMap& m) {
  const std::size_t n = m.t.size();
  std::vector<GradedSeries> x;
  for (std::size_t i = 0; i < n; ++i) {
    const GradedSeries& t = m.t[i];
    if (t.x1() != (i == 0 ? 1 : 0) || t.x2() != (i == 1 ? 1 : 0) || t.c() != 0)
      throw ValidationError("mirror map must be x_i plus exponential terms");
    x.push_back(GradedSeries::variable(static_cast<int>(i), t.trunc()));
  }
  const int steps = m.t.empty() ? 0 : (m.t[0].box() ? 2 : 1) * m.t[0].trunc() + 1;
  for (int r = 0; r < steps; ++r) {
    std::vector<GradedSeries> next;
    for (std::size_t i = 0; i < n; ++i)
      next.push_back(GradedSeries::variable(static_cast<int>(i), m.t[i].trunc()) - compose(m.t[i].quantum(), x));
    if (next == x) break;
    x = std::move(next);
  }
  m.x = std::move(x);
}

GradedSeries transform(const GradedSeries& F, const MirrorMap& m) {
  if (m.x.empty()) {
    MirrorMap copy = m;
    invert_mirror_map(copy);
    return compose(F, copy.x);
  }
  return compose(F, m.x);
}

std::vector<GwEntry> gmt_upto3(int N, int k, const VscTable& table) {
  if (N > k) throw ValidationError("the generalized mirror transform applies for N <= k");
  const int K = k - N;
  auto L = [&](int n, int d) -> Rational {
    if (n < 0 || n > N - 1 - (N - k) * d) return 0;
    return table(n, d);
  };
  auto diff1 = [&](int n, int j, int top) -> Rational { return L(n - j, 1) - L(top - j, 1); };
  auto C11 = [&](int n) -> Rational {
    auto part = [&](int s, int base) -> Rational {
      Rational tot = 0;
      for (int j = 0; j <= K - 1; ++j) {
        Rational a = 0, b = 0, c = 0;
        for (int m = 0; m <= j; ++m) a += L(s - m, 1) * L(base + j - m, 1);
        for (int m = 0; m <= 2 * K; ++m) b += L(s - m, 1);
        for (int m = j + 1; m <= 2 * K - j - 1; ++m) c += L(s - m, 1);
        tot += a - L(K + 2 + j, 1) * b + L(1 + K, 1) * c;
      }
      return tot;
    };
    return part(n, n - 2 * K) - part(1 + 3 * K, 1 + K);
  };
  auto A = [&](int j) { return j <= K ? j + 1 : 1 + 2 * K - j; };
  std::vector<GwEntry> out;
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= N - 2; ++n) {
      const int a = N - 2 - n, b = n - 1 + (N - k) * d;
      if (b < 0 || b > N - 2) continue;
      Rational v;
      if (d == 1) {
        v = L(n, 1) - L(1 + K, 1);
      } else if (d == 2) {
        Rational s = 0;
        for (int j = 0; j <= K; ++j) s += diff1(n, j, 1 + 2 * K);
        v = frac(1, 2) * (L(n, 2) - L(1 + 2 * K, 2)) - L(1 + K, 1) * s;
      } else {
        Rational s2 = 0, s1 = 0, sa = 0;
        for (int j = 0; j <= K; ++j) s2 += L(n - j, 2) - L(1 + 3 * K - j, 2);
        for (int j = 0; j <= 2 * K; ++j) {
          s1 += diff1(n, j, 1 + 3 * K);
          sa += A(j) * diff1(n, j, 1 + 3 * K);
        }
        const Rational l1 = L(1 + K, 1);
        v = frac(1, 3) * (L(n, 3) - L(1 + 3 * K, 3)) - l1 * (s2 + C11(n)) - frac(1, 2) * L(1 + 2 * K, 2) * s1 +
            frac(3, 2) * l1 * l1 * sa;
      }
      out.push_back({d, a, b, n, v * Rational(k)});
    }
  return out;
}

std::vector<GwEntry> gmt_upto3(int N, int k) {
  return gmt_upto3(N, k, [N, k](int n, int d) { return vsc_recursive(N, k, d, n); });
}

PicardFuchsSolution picard_fuchs_basis(int k, int j, int D) {
  if (k < 2 || j < 0 || j > k - 2) throw ValidationError("need 0 <= j <= k-2");
  if (D < 1) throw InvalidDegree("truncation must be at least 1");
  using Trunc = std::vector<Rational>;  // coefficients of z^0..z^j
  auto mul = [j](const Trunc& a, const Trunc& b) {
    Trunc c(static_cast<std::size_t>(j + 1));
    for (int p = 0; p <= j; ++p)
      for (int r = 0; p + r <= j; ++r) c[static_cast<std::size_t>(p + r)] += a[static_cast<std::size_t>(p)] * b[static_cast<std::size_t>(r)];
    return c;
  };
  auto linear = [j](const Rational& s) {  // 1 + s z
    Trunc t(static_cast<std::size_t>(j + 1));
    t[0] = 1;
    if (j >= 1) t[1] = s;
    return t;
  };
  auto inv_linear = [j](const Rational& s) {  // 1 / (1 + s z)
    Trunc t(static_cast<std::size_t>(j + 1));
    for (int p = 0; p <= j; ++p) t[static_cast<std::size_t>(p)] = pow(Rational(-s), p);
    return t;
  };
  PicardFuchsSolution sol;
  for (int m = 0; m <= j; ++m) sol.log_coeffs.emplace_back(D);
  for (int d = 0; d <= D; ++d) {
    Trunc P = linear(0);
    P[0] = factorial(long(k) * d) / pow(factorial(d), k);
    for (int i = 1; i <= k * d; ++i) P = mul(P, linear(frac(k, i)));
    for (int i = 1; i <= d; ++i)
      for (int r = 0; r < k; ++r) P = mul(P, inv_linear(frac(1, i)));
    // e^{zx} contributes z^m x^m / m!
    for (int m = 0; m <= j; ++m) sol.log_coeffs[static_cast<std::size_t>(m)].set({d, 0}, P[static_cast<std::size_t>(j - m)] / factorial(m));
  }
  return sol;
}

}  // namespace resmirror
