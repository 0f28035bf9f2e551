#pragma once

#include "resmirror/poly.hpp"

#include <string>
#include <vector>

namespace resmirror {

struct Factor {
  MultiPoly poly;
  int mult = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// num * prod(nf) / prod(den). Factors are kept monic (leading coefficient
// folded into num), merged, and cancelled against each other when identical.
// The numerator factor list is only a lazy product; it is never required to
// be coprime to anything.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const MultiPoly& p);  // NOLINT
  RatFunc(const Rational& c) : RatFunc(MultiPoly(c)) {}  // NOLINT
  RatFunc(long c) : RatFunc(MultiPoly(c)) {}  // NOLINT

  static RatFunc make(MultiPoly num, std::vector<Factor> nf, std::vector<Factor> den);
  // p^m kept as an unexpanded factor; m may be negative.
  static RatFunc power_of(const MultiPoly& p, int m);

  const MultiPoly& num() const { return num_; }
  const std::vector<Factor>& num_factors() const { return nf_; }
  const std::vector<Factor>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;  // no variables left
  Rational constant_value() const;  // throws ValidationError if not constant
  bool involves(VarId v) const;
  MultiPoly expanded_numerator() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inv() const;
  RatFunc pow(long e) const;

  RatFunc substitute(VarId v, const RatFunc& e) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  RatFunc reduce() const;

  // Value equality checked by cross multiplication.
  bool equals(const RatFunc& o) const;

  std::string str(const VarSet* names = nullptr) const;
  std::string to_json() const;

 private:
  void normalize();

  MultiPoly num_;
  std::vector<Factor> nf_;
  std::vector<Factor> den_;
};

// Convenience wrappers named after the operations they implement.
RatFunc ratfunc_substitute(const RatFunc& r, VarId v, const RatFunc& e);
RatFunc ratfunc_reduce(const RatFunc& r);

}  // namespace resmirror
