#include "resmirror/partitions.hpp"

#include "resmirror/errors.hpp"

#include <functional>

namespace resmirror {

std::vector<OrderedPartition> ordered_partitions(int d) {
  if (d <= 0) throw InvalidDegree("degree must be positive, got " + std::to_string(d));
  if (d > 24) throw InvalidDegree("degree too large for enumeration");
  std::vector<OrderedPartition> out;
  OrderedPartition cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(d);
  return out;
}

std::vector<BiPartition> ordered_bipartitions(BiDegree dd) {
  if (dd.da < 0 || dd.db < 0 || (dd.da == 0 && dd.db == 0))
    throw InvalidDegree("bi-degree must be nonnegative and nonzero");
  std::vector<BiPartition> out;
  BiPartition cur;
  // flattened order: (0,d) parts sort before (d,0) parts of the same step
  std::function<void(int, int)> rec = [&](int a, int b) {
    if (a == 0 && b == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= b; ++p) {
      cur.push_back({0, p});
      rec(a, b - p);
      cur.pop_back();
    }
    for (int p = 1; p <= a; ++p) {
      cur.push_back({p, 0});
      rec(a - p, b);
      cur.pop_back();
    }
  };
  rec(dd.da, dd.db);
  return out;
}

std::string to_string(const BiDegree& d) { return "(" + std::to_string(d.da) + "," + std::to_string(d.db) + ")"; }

std::string to_string(const OrderedPartition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string to_string(const BiPartition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

}  // namespace resmirror
