#pragma once

#include "resmirror/ratfunc.hpp"

#include <utility>
#include <vector>

namespace resmirror {

// A pole of the integrand in `var` at `location`, a polynomial in the other
// variables. order_bound is filled in by pole_order() and not trusted as input.
struct PoleSpec {
  VarId var = 0;
  MultiPoly location;
  int order_bound = 0;
};

struct LaurentSeries {
  int low = 0;                  // exponent of coeffs[0]
  std::vector<RatFunc> coeffs;  // eps^low .. eps^upto
  RatFunc coefficient(int exp) const;
};

int pole_order(const RatFunc& r, const PoleSpec& p);

LaurentSeries laurent_expand(const RatFunc& r, const PoleSpec& p, int upto);
RatFunc residue_at(const RatFunc& r, const PoleSpec& p);
RatFunc residue_sum(const RatFunc& r, const std::vector<PoleSpec>& specs);

using Substitution = std::pair<VarId, RatFunc>;

// One integration: multiply by measure, apply `before`, take residues in var
// at all poles (summed), then apply `after`.
struct ResidueStep {
  VarId var = 0;
  std::vector<PoleSpec> poles;
  RatFunc measure = RatFunc(1);
  std::vector<Substitution> before;
  std::vector<Substitution> after;
};

using ResidueSchedule = std::vector<ResidueStep>;

ResidueStep simple_step(VarId var, std::vector<MultiPoly> locations, RatFunc measure = RatFunc(1));

// Steps run in the given order (first step = innermost integral).
RatFunc iterated_residue(const RatFunc& r, const ResidueSchedule& s);

}  // namespace resmirror
