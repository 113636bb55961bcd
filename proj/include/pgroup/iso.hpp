#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/structure.hpp"

namespace pgroup {

// Cheap isomorphism invariants.  Equality is necessary for isomorphism,
// never sufficient.
struct Fingerprint {
  std::int64_t order = 0;
  std::int64_t exponent = 0;
  int nilpotency_class = 0;
  int d = 0;
  std::int64_t derived_order = 0;
  std::int64_t center_order = 0;
  std::vector<std::int64_t> abelianization;  // invariants of G/G'
  std::vector<std::pair<std::int64_t, std::int64_t>> order_histogram;  // (order, count)
  // Subgroup counts per order, filled only when the lattice cap permits.
  std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> subgroup_counts;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint fingerprint(GroupRef g);
Fingerprint fingerprint(GroupRef g, std::int64_t lattice_cap);  // adds subgroup counts

// Backtracking search for a bijective homomorphism, mapping a generating
// tuple of a into b with candidates filtered by element order and
// centralizer size.  Throws IsoCapExceeded when |a| > iso_cap.
bool is_isomorphic(GroupRef a, GroupRef b, std::int64_t iso_cap = 4096);

// Matches g against the named-group catalog for its order (cyclics and
// their products, D8, Q8, the M_p families, and their direct/central
// products with cyclic factors); returns the first matching label in a
// fixed candidate order.
std::optional<std::string> recognize(GroupRef g, std::int64_t iso_cap = 4096);

}  // namespace pgroup
