#include "resmirror/rational.hpp"

#include "resmirror/errors.hpp"

#include <cctype>

namespace resmirror {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ValidationError("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw DivisionByZero("zero denominator in " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational frac(long n, long d) {
  if (d == 0) throw DivisionByZero("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rational(r);
}

Rational binomial(long n, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Rational(n - i);
    r /= Rational(i + 1);
  }
  return r;
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DivisionByZero("zero to a negative power");
    return pow(Rational(1) / base, -exp);
  }
  Rational r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace resmirror
