#pragma once

#include <string>

namespace resmirror {

// z^s w^t; for one-form geometries (cpn, wp2) only s is used (h^s or z^s).
struct Insertion {
  int s = 0;
  int t = 0;
  int degree() const { return s + t; }
  friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

// Accepts "1", "z", "w", "zw", "w2", "z2w", "h3", and for the single-variable
// case a bare integer exponent.
Insertion parse_insertion(const std::string& label);
std::string label(const Insertion& ins, bool hyperplane = false);

}  // namespace resmirror
