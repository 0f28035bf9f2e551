#pragma once

#include "resmirror/insertion.hpp"
#include "resmirror/partitions.hpp"
#include "resmirror/residue.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resmirror {

enum class GeometryKind { cpn, kf0, f3, wp1, wp2, wp3 };

struct GeometrySpec {
  GeometryKind kind = GeometryKind::cpn;
  int N = 5;            // cpn only
  int k = 5;            // cpn only
  Rational ring_k = 1;  // kf0 virtual classical ring parameter

  std::string name() const;
  bool two_forms() const { return kind != GeometryKind::cpn && kind != GeometryKind::wp2; }
  // Insertions accepted by two_point.
  std::vector<Insertion> basis() const;
  bool in_basis(const Insertion& ins) const;
};

GeometrySpec make_geometry(const std::string& name, int N = 5, int k = 5, Rational ring_k = 1);
GeometrySpec cpn(int N, int k);

// Integrand, residue schedule and orbifold prefactor of one fixed component.
struct ChainProgram {
  VarSet vars;
  RatFunc integrand;
  ResidueSchedule schedule;
  Rational scale = 1;
};

ChainProgram chain_program(const GeometrySpec& g, const BiPartition& sigma, const Insertion& a, const Insertion& b);

// One-form geometries take partitions as BiPartitions of pure (d,0) parts.
Rational amplitude(const GeometrySpec& g, const BiPartition& sigma, const Insertion& a, const Insertion& b);
Rational amplitude(const GeometrySpec& g, const OrderedPartition& sigma, const Insertion& a, const Insertion& b);

// True when the degree count allows a nonzero two-point number.
bool selection_rule(const GeometrySpec& g, BiDegree dd, const Insertion& a, const Insertion& b);

Rational two_point(const GeometrySpec& g, BiDegree dd, const Insertion& a, const Insertion& b);

Rational two_point_cpn(int N, int k, int d, int a, int b);
Rational two_point_kf0(BiDegree dd, const Insertion& a, const Insertion& b);
Rational two_point_f3(BiDegree dd, const Insertion& a, const Insertion& b);
Rational two_point_wp1(BiDegree dd, const Insertion& a, const Insertion& b);
Rational two_point_wp2(int d, int a, int b);
Rational two_point_wp3(BiDegree dd, const Insertion& a, const Insertion& b);

// Classical (or virtual classical, for kf0) triple intersection.
Rational classical_triple(const GeometrySpec& g, const Insertion& a, const Insertion& b, const Insertion& c);

struct ClassicalPairing {
  std::vector<Insertion> basis;
  std::vector<std::vector<Rational>> eta;
  std::vector<std::vector<Rational>> eta_inv;
  int index(const Insertion& ins) const;  // -1 if absent
  Rational inv(const Insertion& a, const Insertion& b) const;
};

// Metric on the pairing basis; throws SingularMetric if not invertible.
ClassicalPairing classical_pairing(const GeometrySpec& g);

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m);

}  // namespace resmirror
