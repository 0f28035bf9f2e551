#pragma once

#include "resmirror/geometry.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace resmirror {

// x1*a1 + x2*a2 + c + sum_d coef_d * exp(da*x1 + db*x2), kept up to total
// degree `trunc` (or da, db <= trunc each when `box`).
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(int trunc, bool box = false) : trunc_(trunc), box_(box) {}

  static GradedSeries variable(int i, int trunc);  // x1 or x2
  static GradedSeries constant(const Rational& c, int trunc);

  int trunc() const { return trunc_; }
  bool box() const { return box_; }
  bool keeps(BiDegree d) const;

  Rational& x1() { return x1_; }
  Rational& x2() { return x2_; }
  Rational& c() { return c_; }
  const Rational& x1() const { return x1_; }
  const Rational& x2() const { return x2_; }
  const Rational& c() const { return c_; }
  const std::map<BiDegree, Rational>& terms() const { return q_; }

  Rational coefficient(BiDegree d) const;
  void set(BiDegree d, const Rational& v);
  void add(BiDegree d, const Rational& v);

  bool pure_q() const { return x1_ == 0 && x2_ == 0 && c_ == 0; }
  bool has_log() const { return x1_ != 0 || x2_ != 0; }
  GradedSeries quantum() const;  // drops the affine part

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  GradedSeries& operator*=(const Rational& s);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const Rational& s) { return a *= s; }
  // Product; at most one factor may carry x1/x2 terms, and then the other
  // must be a constant.
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend bool operator==(const GradedSeries& a, const GradedSeries& b);

  std::string str(const std::string& v1 = "x1", const std::string& v2 = "x2") const;
  std::string to_json() const;
  static GradedSeries from_json(const std::string& text);

 private:
  int trunc_ = 0;
  bool box_ = false;
  Rational x1_, x2_, c_;
  std::map<BiDegree, Rational> q_;
};

// exp of a series with no affine part (InvalidExp otherwise).
GradedSeries exp_of_pure_q(const GradedSeries& s);
// 1/s for s with nonzero constant and no log part.
GradedSeries reciprocal(const GradedSeries& s);

using TwoPointFn = std::function<Rational(const GeometrySpec&, BiDegree, const Insertion&, const Insertion&)>;

GradedSeries build_generating_function(const GeometrySpec& g, const Insertion& a, const Insertion& b, int D,
                                       const TwoPointFn& tp = two_point);

struct MirrorMap {
  std::vector<GradedSeries> t;  // t_i(x); one entry for single-form targets
  std::vector<GradedSeries> x;  // x_i(t), filled by invert_mirror_map
};

MirrorMap mirror_map(const GeometrySpec& g, int D, const TwoPointFn& tp = two_point);
void invert_mirror_map(MirrorMap& m);

// F(x1, x2) with x_i replaced by the series X_i(t), each t_i plus pure q-terms.
GradedSeries compose(const GradedSeries& F, const std::vector<GradedSeries>& X);
GradedSeries transform(const GradedSeries& F, const MirrorMap& m);

struct GwEntry {
  int d = 0, a = 0, b = 0, n = 0;
  Rational value;
};
using VscTable = std::function<Rational(int n, int d)>;

// Two-point invariants <O_{h^a} O_{h^b}>_{0,d}, d <= 3, from virtual structure
// constants; subscripts outside 0..N-1-(N-k)d read as zero.
std::vector<GwEntry> gmt_upto3(int N, int k, const VscTable& L);
std::vector<GwEntry> gmt_upto3(int N, int k);

// u_j = sum_m x^m * log_coeffs[m] for the Calabi-Yau hypersurface of degree k.
struct PicardFuchsSolution {
  std::vector<GradedSeries> log_coeffs;
};
PicardFuchsSolution picard_fuchs_basis(int k, int j, int D);

}  // namespace resmirror
