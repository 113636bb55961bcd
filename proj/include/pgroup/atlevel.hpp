#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pgroup/structure.hpp"

namespace pgroup {

// Full subgroup lattice of a group together with the level of every
// member (0 = abelian, t >= 1 = A_t) and the indices of the minimal
// non-abelian members.
struct LevelledLattice {
  std::vector<Subgroup> subgroups;  // sorted by (order, bit-set)
  std::vector<int> level;           // parallel to subgroups
  std::vector<std::size_t> minimal_nonabelian;

  int level_of_whole() const { return level.empty() ? 0 : level.back(); }
};

LevelledLattice levelled_lattice(const Subgroup& s, std::int64_t lattice_cap);

// Level summary of a whole group.
struct AtReport {
  int level = 0;                       // 0 iff abelian
  std::map<int, std::int64_t> alpha;   // k -> alpha_k, 1 <= k <= level
  std::optional<Subgroup> unique_a2;   // present iff alpha[2] == 1
  bool a2_in_frattini = false;

  std::int64_t alpha_of(int k) const {
    auto it = alpha.find(k);
    return it == alpha.end() ? 0 : it->second;
  }
};

AtReport analyze_levels(GroupRef g, std::int64_t lattice_cap);

// True iff s is non-abelian with every maximal subgroup abelian.  The
// result is cross-checked against d(s)=2 && |s'|=p and d(s)=2 && Z(s)=Phi(s);
// any disagreement throws InternalInconsistency.
bool is_minimal_nonabelian(const Subgroup& s);

int at_level(const Subgroup& s, std::int64_t lattice_cap);
std::int64_t alpha_k(GroupRef g, int k, std::int64_t lattice_cap);

// The 3x3 matrix over GF(p) with rows solving a_i^(p^m_i) = x^w1 y^w2 z^w3
// where x = [a2,a3], y = [a3,a1], z = [a1,a2] for a deterministic basis
// a1,a2,a3 of g modulo its derived subgroup, element orders non-increasing.
// Requires d(g) = 3, Phi(g) <= Z(g) and g' elementary abelian of rank 3.
struct OmegaMatrix {
  std::int64_t p = 0;
  std::array<std::array<int, 3>, 3> entries{};
  std::array<int, 3> basis{};  // the chosen lifts a1, a2, a3
  std::array<int, 3> m{};      // o(a_i mod g') = p^m_i

  // Zero values among the three 2x2 principal minors ({1,2},{1,3},{2,3}).
  int zero_principal_minor_count() const;
};

OmegaMatrix omega_matrix(GroupRef g);

}  // namespace pgroup
