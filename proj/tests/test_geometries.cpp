#include <doctest.h>

#include "fixtures.hpp"
#include "support.hpp"

#include "resmirror/errors.hpp"
#include "resmirror/geometry.hpp"

#include <random>

using namespace resmirror;
using support::R;

TEST_CASE("single-component amplitudes") {
  CHECK(amplitude(make_geometry("kf0"), BiPartition{{1, 0}}, {1, 0}, {1, 0}) == -2);
  CHECK(amplitude(make_geometry("f3"), BiPartition{{1, 0}}, {0, 0}, {0, 0}) == 5);
  CHECK(amplitude(make_geometry("f3"), BiPartition{{0, 1}}, {0, 1}, {0, 2}) == 3);
}

TEST_CASE("projective hypersurface two-point numbers") {
  CHECK(two_point_cpn(7, 5, 1, 1, 5) == 600);
  CHECK(two_point_cpn(5, 5, 1, 0, 2) == 3850);
  CHECK(two_point_cpn(5, 5, 2, 1, 1) == frac(16482625, 2));
  CHECK(two_point_cpn(8, 9, 1, 0, 4) == 307250172);
  for (const auto& v : fixtures::cpn_75) CHECK(two_point_cpn(v.N, v.k, v.d, v.a, v.b) == R(v.value));
  CHECK_THROWS_AS(two_point_cpn(5, 5, 1, 0, 4), InvalidInsertion);
}

TEST_CASE("two-form geometries") {
  CHECK(two_point_kf0({1, 1}, {0, 0}, {1, 1}) == -6);
  CHECK(two_point_kf0({2, 1}, {1, 0}, {1, 0}) == -76);
  CHECK(two_point_kf0({0, 1}, {0, 0}, {1, 1}) == -1);
  CHECK(two_point_f3({3, 1}, {0, 0}, {0, 0}) == frac(1901, 3));
  CHECK(two_point_f3({3, 2}, {1, 0}, {0, 1}) == -96);
  CHECK(two_point_f3({3, 3}, {0, 2}, {0, 2}) == 432);
  CHECK(two_point_wp1({0, 1}, {0, 0}, {0, 2}) == 1024);
  CHECK(two_point_wp1({1, 1}, {0, 0}, {1, 1}) == 192);
  CHECK(two_point_wp1({1, 0}, {1, 0}, {1, 0}) == 4);
  CHECK(two_point_wp3({0, 1}, {0, 0}, {0, 2}) == 3456);
  CHECK(two_point_wp3({1, 0}, {1, 0}, {1, 0}) == 2);
  CHECK(two_point_wp3({1, 1}, {1, 0}, {1, 0}) == 2976);
  CHECK_THROWS_AS(two_point_f3({1, 0}, {0, 3}, {0, 0}), InvalidInsertion);
}

TEST_CASE("weighted P(1,1,1,3) against twice the w-coefficients") {
  CHECK(two_point_wp2(1, 0, 1) == 1488);
  CHECK(two_point_wp2(2, 0, 1) == 947304);
  CHECK(two_point_wp2(5, 0, 1) == frac(6338685466447488, 5));
}

TEST_CASE("classical intersections") {
  CHECK(classical_triple(make_geometry("wp1"), {0, 0}, {0, 0}, {1, 2}) == 4);
  CHECK(classical_triple(make_geometry("kf0", 5, 5, 3), {0, 0}, {1, 0}, {1, 1}) == -3);
  CHECK(classical_triple(make_geometry("f3"), {0, 0}, {0, 0}, {0, 2}) == 3);
  CHECK(classical_triple(cpn(5, 5), {1, 0}, {1, 0}, {1, 0}) == 5);
  const auto f3 = classical_pairing(make_geometry("f3"));
  REQUIRE(f3.basis.size() == 4);
  CHECK(f3.eta[0][3] == 3);
  CHECK(f3.eta[1][2] == 1);
  CHECK(f3.eta[2][2] == 3);
  for (const char* g : {"kf0", "f3", "wp1", "wp2", "wp3"}) {
    const auto P = classical_pairing(make_geometry(g));
    const std::size_t n = P.basis.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t m = 0; m < n; ++m) s += P.eta[i][m] * P.eta_inv[m][j];
        CHECK(s == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("insertion symmetry") {
  for (const char* name : {"kf0", "f3", "wp1", "wp3"}) {
    const GeometrySpec g = make_geometry(name);
    for (BiDegree d : {BiDegree{1, 0}, BiDegree{0, 1}, BiDegree{1, 1}, BiDegree{2, 1}})
      for (const auto& a : g.basis())
        for (const auto& b : g.basis()) {
          if (!(a < b) || !selection_rule(g, d, a, b)) continue;
          CHECK_MESSAGE(two_point(g, d, a, b) == two_point(g, d, b, a), name, " ", to_string(d));
        }
  }
  for (int d = 1; d <= 3; ++d)
    for (int a = 0; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) CHECK(two_point_cpn(7, 5, d, a, b) == two_point_cpn(7, 5, d, b, a));
}

TEST_CASE("off the selection rule every two-point number vanishes") {
  std::mt19937 rng(2024);
  for (const char* name : {"cpn", "kf0", "f3", "wp1", "wp2", "wp3"}) {
    const GeometrySpec g = make_geometry(name, 7, 5);
    const auto basis = g.basis();
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> deg(0, 2);
    int tried = 0;
    while (tried < 20) {
      BiDegree d{deg(rng), g.two_forms() ? deg(rng) : 0};
      if (d.total() == 0) continue;
      const Insertion a = basis[pick(rng)], b = basis[pick(rng)];
      if (selection_rule(g, d, a, b)) continue;
      ++tried;
      CHECK_MESSAGE(two_point(g, d, a, b) == 0, name, " ", to_string(d), " ", label(a), " ", label(b));
    }
  }
}

TEST_CASE("Fano vanishing for N >= 2k") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) CHECK(two_point_cpn(8, 4, 2, a, b) == 0);
}

TEST_CASE("N = k+1 at degree one depends only on the insertion set") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) CHECK(two_point_cpn(6, 5, 1, a, b) == two_point_cpn(6, 5, 1, b, a));
  // L_n = L_{k-1-n}
  for (int n = 0; n <= 4; ++n)
    CHECK(two_point_cpn(6, 5, 1, 4 - n, n) == two_point_cpn(6, 5, 1, n, 4 - n));
}

TEST_CASE("kf0 quantum numbers do not depend on the ring parameter") {
  const GeometrySpec g1 = make_geometry("kf0", 5, 5, 1), g7 = make_geometry("kf0", 5, 5, 7);
  for (BiDegree d : {BiDegree{1, 0}, BiDegree{1, 1}, BiDegree{2, 1}})
    for (const auto& a : g1.basis())
      for (const auto& b : g1.basis()) CHECK(two_point(g1, d, a, b) == two_point(g7, d, a, b));
}
