#include <doctest.h>

#include "fixtures.hpp"
#include "support.hpp"

#include "resmirror/errors.hpp"
#include "resmirror/jfunction.hpp"

using namespace resmirror;
using support::R;

TEST_CASE("ordered-partition formula") {
  const std::vector<Rational> w{744, 473652};
  const auto j = j_from_w(w);
  CHECK(j[0] == 744);
  CHECK(j[1] == Rational(473652) - Rational(744 * 744) / 2);
}

TEST_CASE("j coefficients from two-point numbers") {
  const auto e = j_coefficients(4);
  REQUIRE(e.j.size() == 4);
  for (std::size_t d = 0; d < 4; ++d) {
    CHECK(e.w[d] == R(fixtures::w_coeffs[d]));
    CHECK(e.j[d] == R(fixtures::j_coeffs[d]));
  }
  CHECK_THROWS_AS(j_coefficients(0), InvalidDegree);
}

TEST_CASE("reversion round trip") {
  std::vector<Rational> j;
  for (const char* s : fixtures::j_coeffs) j.push_back(R(s));
  const auto w = w_from_j(j);
  for (std::size_t d = 0; d < fixtures::w_coeffs.size(); ++d) CHECK(w[d] == R(fixtures::w_coeffs[d]));
  CHECK(j_from_w(w) == j);
  const std::vector<Rational> arbitrary{3, frac(-1, 2), 7, 0, frac(5, 9)};
  CHECK(w_from_j(j_from_w(arbitrary)) == arbitrary);
}
