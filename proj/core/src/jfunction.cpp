#include "resmirror/jfunction.hpp"

#include "resmirror/errors.hpp"
#include "resmirror/geometry.hpp"
#include "resmirror/partitions.hpp"

namespace resmirror {

namespace {

using Series = std::vector<Rational>;  // coefficients of J^0..J^n

Series mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t k = 0; i + k < c.size(); ++k) c[i + k] += a[i] * b[k];
  return c;
}

}  // namespace

std::vector<Rational> j_from_w(const std::vector<Rational>& w) {
  std::vector<Rational> j;
  for (int d = 1; d <= static_cast<int>(w.size()); ++d) {
    Rational sum = 0;
    for (const auto& sigma : ordered_partitions(d)) {
      const long l = static_cast<long>(sigma.size());
      Rational t = pow(Rational(-(d - 1)), l - 1) / factorial(l);
      for (int part : sigma) t *= w[static_cast<std::size_t>(part - 1)];
      sum += t;
    }
    j.push_back(sum);
  }
  return j;
}

std::vector<Rational> w_from_j(const std::vector<Rational>& j) {
  const std::size_t n = j.size();
  // q(J) solves q = J (1 + sum_d j_d q^d); then w(J) = log(1 + sum_d j_d q^d)
  auto bracket = [&](const Series& q) {
    Series s(n + 1), p(n + 1);
    p[0] = 1;
    for (std::size_t d = 1; d <= n; ++d) {
      p = mul(p, q);
      for (std::size_t i = 0; i <= n; ++i) s[i] += j[d - 1] * p[i];
    }
    return s;
  };
  Series q(n + 1);
  if (n >= 1) q[1] = 1;
  for (std::size_t r = 0; r <= n; ++r) {
    Series s = bracket(q), next(n + 1);
    next[1] = 1;
    for (std::size_t i = 1; i <= n; ++i) next[i] += s[i - 1];
    q = std::move(next);
  }
  const Series s = bracket(q);
  Series log(n + 1), p(n + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    p = mul(p, s);
    const Rational c = frac(m % 2 ? 1 : -1, static_cast<long>(m));
    for (std::size_t i = 0; i <= n; ++i) log[i] += c * p[i];
  }
  return {log.begin() + 1, log.end()};
}

JExpansion j_coefficients(int dmax) {
  if (dmax < 1) throw InvalidDegree("dmax must be at least 1");
  JExpansion out;
  for (int d = 1; d <= dmax; ++d) out.w.push_back(two_point_wp2(d, 0, 1) / 2);
  out.j = j_from_w(out.w);
  return out;
}

}  // namespace resmirror
