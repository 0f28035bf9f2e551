#pragma once

#include <compare>
#include <string>
#include <vector>

namespace resmirror {

using OrderedPartition = std::vector<int>;

struct BiDegree {
  int da = 0;
  int db = 0;
  int total() const { return da + db; }
  bool is_a() const { return db == 0; }  // axis (d,0)
  int size() const { return da + db; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

using BiPartition = std::vector<BiDegree>;

std::vector<OrderedPartition> ordered_partitions(int d);
std::vector<BiPartition> ordered_bipartitions(BiDegree dd);

std::string to_string(const BiDegree& d);
std::string to_string(const OrderedPartition& p);
std::string to_string(const BiPartition& p);

}  // namespace resmirror
