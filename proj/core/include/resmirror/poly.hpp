#pragma once

#include "resmirror/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace resmirror {

inline constexpr int kMaxVars = 16;

using VarId = int;
using Mono = std::array<std::uint8_t, kMaxVars>;

// Names for printing; indices are what the algebra works with.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  VarId add(const std::string& name);
  VarId id(const std::string& name) const;  // throws ValidationError if missing
  const std::string& name(VarId v) const { return names_.at(static_cast<std::size_t>(v)); }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
};

Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);
int mono_degree(const Mono& a);

// Sparse polynomial: terms sorted by descending lex order on the exponent
// vector (variable 0 most significant), no zero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Mono, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly var(VarId v, int exp = 1);
  static MultiPoly monomial(const Mono& m, const Rational& c);
  // Takes arbitrary terms, sorts and merges.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  int degree_in(VarId v) const;
  int total_degree() const;
  bool involves(VarId v) const { return degree_in(v) > 0; }
  bool is_homogeneous() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(long e) const;  // e < 0 throws InvalidExp

  Rational evaluate(const std::vector<Rational>& point) const;
  MultiPoly substitute(VarId v, const MultiPoly& e) const;
  // Coefficients c_i with p = sum_i c_i v^i.
  std::vector<MultiPoly> coefficients_in(VarId v) const;
  // Coefficients of eps^s in p(v = loc + eps).
  std::vector<MultiPoly> taylor_shift(VarId v, const MultiPoly& loc) const;

  // Exact quotient p / d if d divides p, otherwise false.
  bool divide_exact(const MultiPoly& d, MultiPoly& quotient) const;

  std::string str(const VarSet* names = nullptr) const;
  std::string to_json() const;
  static MultiPoly from_json(const std::string& text);

 private:
  std::vector<Term> terms_;
};

MultiPoly poly_combine_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_combine_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_combine_pow(const MultiPoly& p, long e);

}  // namespace resmirror
