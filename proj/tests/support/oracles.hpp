#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "pgroup/structure.hpp"
#include "support/hand_models.hpp"

namespace testsupport {

// Brute-force subgroup enumeration for groups of order <= 64, independent
// of the cyclic-extension lattice: every subgroup is reached by repeatedly
// extending known subgroups with one more element and closing under the
// multiplication table.  Subgroups are element bit-masks.
std::set<std::uint64_t> oracle_all_subgroups(int n, const std::function<int(int, int)>& mul);

std::set<std::uint64_t> oracle_all_subgroups(const TableGroup& t);
std::set<std::uint64_t> oracle_all_subgroups(const pgroup::ConcreteGroup& g);

// All-pairs commutator closure (no generator shortcuts).
pgroup::Subgroup oracle_derived(const pgroup::Subgroup& s);

// Center by scanning all pairs of elements.
std::vector<int> oracle_center(const pgroup::ConcreteGroup& g);

}  // namespace testsupport
