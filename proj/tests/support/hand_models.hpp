#pragma once

#include <cstdint>
#include <vector>

#include "pgroup/engine.hpp"

namespace testsupport {

// A tiny multiplication-table group, built by hand so it is independent of
// the coset-enumeration path.
struct TableGroup {
  int n = 0;
  std::vector<std::vector<int>> mul;  // mul[x][y] = x*y, identity = 0

  int inv(int x) const {
    for (int y = 0; y < n; ++y)
      if (mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == 0) return y;
    return -1;
  }
  std::int64_t element_order(int x) const {
    int z = x;
    std::int64_t ord = 1;
    while (z != 0) {
      z = mul[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)];
      ++ord;
    }
    return ord;
  }
};

// Dihedral group of the square: index = rot + 4*flip, 0 = identity.
TableGroup d8_table();
// Quaternion units {1,-1,i,-i,j,-j,k,-k}: index = 2*axis + (negative?1:0).
TableGroup q8_table();

// Lifts a table group into the engine representation via the actions of
// the given generators.
pgroup::GroupRef table_to_group(const TableGroup& t, const std::vector<int>& gens);

}  // namespace testsupport
