#include <doctest.h>

#include "resmirror/errors.hpp"
#include "resmirror/residue.hpp"

#include <algorithm>
#include <random>

using namespace resmirror;

namespace {
const MultiPoly Z = MultiPoly::var(0), A = MultiPoly::var(1), B = MultiPoly::var(2);
}

TEST_CASE("Laurent expansion") {
  const auto s = laurent_expand(RatFunc(Z).inv(), {0, MultiPoly()}, 1);
  CHECK(s.coefficient(-1).equals(RatFunc(1)));
  CHECK(s.coefficient(0).is_zero());
  CHECK(s.coefficient(1).is_zero());

  // 1/(z(z-a)) = -1/a eps^-1 - 1/a^2 - 1/a^3 eps - ...
  const RatFunc r = (RatFunc(Z) * RatFunc(Z - A)).inv();
  const auto t = laurent_expand(r, {0, MultiPoly()}, 0);
  CHECK(t.coefficient(-1).equals(-RatFunc(A).inv()));
  CHECK(t.coefficient(0).equals(-RatFunc::power_of(A, -2)));

  // 1/(w - 3z) at w = 3z
  const RatFunc u = RatFunc(B - A * Rational(3)).inv();
  const auto v = laurent_expand(u, {2, A * Rational(3)}, -1);
  CHECK(v.coefficient(-1).equals(RatFunc(1)));
}

TEST_CASE("single residues") {
  CHECK(residue_at(RatFunc(Z).inv(), {0, MultiPoly()}).equals(RatFunc(1)));
  const RatFunc r = (RatFunc(Z - A) * RatFunc(Z - B)).inv();
  CHECK(residue_at(r, {0, A}).equals(RatFunc(A - B).inv()));
  // 1/(z^2 (1 - z)): coefficient of z in the geometric series
  const RatFunc g = (RatFunc::power_of(Z, 2) * RatFunc(MultiPoly(1) - Z)).inv();
  CHECK(residue_at(g, {0, MultiPoly()}).equals(RatFunc(1)));
}

TEST_CASE("residue sums over several poles") {
  const MultiPoly w = MultiPoly::var(0), z = MultiPoly::var(1);
  const RatFunc d = RatFunc(w) * RatFunc(w - z * Rational(3));
  const std::vector<PoleSpec> poles{{0, MultiPoly()}, {0, z * Rational(3)}};
  CHECK(residue_sum(d.inv(), poles).is_zero());
  CHECK(residue_sum(RatFunc(w * w) / d, poles).equals(RatFunc(z * Rational(3))));
  CHECK(residue_sum(RatFunc(w).inv(), {{0, MultiPoly()}}).equals(RatFunc(1)));
  CHECK_THROWS_AS(residue_sum(d.inv(), {{0, MultiPoly()}, {0, MultiPoly()}}), DuplicatePole);
}

TEST_CASE("residues of a rational function with all poles sum to zero") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> root(-6, 6), mult(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> roots;
    std::vector<Factor> den;
    int deg = 0;
    while (roots.size() < 3) {
      const int r = root(rng);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      const int m = mult(rng);
      deg += m;
      den.push_back({Z - MultiPoly(r), m});
    }
    MultiPoly num;
    for (int e = 0; e <= deg - 2; ++e) num += MultiPoly::var(0, e) * Rational(root(rng));
    const RatFunc f = RatFunc::make(num, {}, den);
    std::vector<PoleSpec> poles;
    for (int r : roots) poles.push_back({0, MultiPoly(r)});
    CHECK(residue_sum(f, poles).is_zero());
  }
}

TEST_CASE("iterated residues") {
  const MultiPoly z0 = MultiPoly::var(0), z1 = MultiPoly::var(1);
  ResidueSchedule s;
  s.push_back(simple_step(1, {MultiPoly()}, RatFunc::power_of(z1, -2)));
  s.push_back(simple_step(0, {MultiPoly()}, RatFunc::power_of(z0, -2)));
  CHECK(iterated_residue(RatFunc(z0 * z1), s).equals(RatFunc(1)));
  const RatFunc r = RatFunc(z0 + z1) / RatFunc(z0);
  CHECK(iterated_residue(r, {}).equals(r));
}
