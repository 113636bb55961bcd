#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pgroup/bitset.hpp"
#include "pgroup/engine.hpp"

namespace pgroup {

// A subgroup of a ConcreteGroup: membership bit-set plus a generating set.
struct Subgroup {
  GroupRef group;
  Bitset members;
  std::vector<int> gens;

  std::int64_t order() const { return static_cast<std::int64_t>(members.count()); }
  bool contains(int x) const { return members.test(static_cast<std::size_t>(x)); }

  // Canonical comparison used everywhere results are sorted.
  bool operator<(const Subgroup& other) const { return members.lex_less(other.members); }
};

Subgroup trivial_subgroup(GroupRef g);
Subgroup full_subgroup(GroupRef g);

// Smallest subgroup containing the seed elements (orbit closure under
// right multiplication).  The recorded generating set is the subsequence
// of seeds that enlarged the closure.
Subgroup closure(GroupRef g, std::vector<int> seed);

// Wraps a membership set already known to be closed; derives generators.
Subgroup subgroup_from_members(GroupRef g, const Bitset& members);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool is_abelian(const Subgroup& s);

// Derived subgroup of s (commutators of s with itself).
Subgroup derived_subgroup(const Subgroup& s);

// Center of s as a group in its own right.
Subgroup center(const Subgroup& s);

// Elements of `ambient` commuting with / normalizing s.
Subgroup centralizer(const Subgroup& ambient, const Subgroup& s);
Subgroup normalizer(const Subgroup& ambient, const Subgroup& s);
bool is_normal(const Subgroup& ambient, const Subgroup& s);
Subgroup normal_closure(const Subgroup& ambient, const Subgroup& s);

// Frattini subgroup computed as s' U_1(s), then cross-checked against the
// intersection of all maximal subgroups; disagreement throws
// InternalInconsistency.
Subgroup frattini(const Subgroup& s);

Subgroup omega_s(const Subgroup& s, int level);
Subgroup agemo_s(const Subgroup& s, int level);

struct QuotientResult {
  GroupRef quotient;
  std::vector<int> projection;  // ambient element index -> quotient index
};

// Quotient by a normal subgroup; throws NotNormal otherwise.
QuotientResult quotient(GroupRef g, const Subgroup& n);

// Pushes a subgroup through a projection table.
Subgroup project_subgroup(const QuotientResult& q, const Subgroup& s);

// Re-indexes a subgroup as a ConcreteGroup in its own right (no source
// presentation attached).
GroupRef materialize(const Subgroup& s);

int min_gens(const Subgroup& s);  // d(s), via |s : Phi(s)|
int nilpotency_class(const Subgroup& s);
std::int64_t exponent_of(const Subgroup& s);
// Independent generators of an abelian subgroup, element orders
// non-increasing (greedy max-order choice, lowest index on ties).
std::vector<int> abelian_basis(const Subgroup& s);
// Invariant factors as prime powers, largest first; throws NotAbelian.
std::vector<std::int64_t> abelian_invariants(const Subgroup& s);

// Index-p subgroups (preimages of hyperplanes of s/Phi(s)); count is
// verified against 1 + p + ... + p^(d-1).
std::vector<Subgroup> maximal_subgroups(const Subgroup& s);

// Every subgroup of s exactly once, sorted by (order, bit-set), built by
// layered cyclic extension.  Throws LatticeCapExceeded when |s| > cap.
std::vector<Subgroup> all_subgroups(const Subgroup& s, std::int64_t lattice_cap);

// Presentation-level products; both factors must share the prime.  For the
// central product, `identify` lists pairs (element of a, element of b) whose
// generated central subgroups are amalgamated via x_i -> y_i; the pairs must
// generate central subgroups and induce an isomorphism (BadIdentification
// otherwise).  An empty identification yields the direct product.
GroupRef direct_product(const ConcreteGroup& a, const ConcreteGroup& b,
                        std::int64_t max_cosets = 500000);
GroupRef central_product(const ConcreteGroup& a, const ConcreteGroup& b,
                         const std::vector<std::pair<int, int>>& identify,
                         std::int64_t max_cosets = 500000);

// Left-coset partition of s in g: elements x, y share a label iff xs == ys.
// Labels are first-occurrence ordinals; also used by normalizer().
std::vector<int> left_coset_labels(const ConcreteGroup& g, const Subgroup& s);

}  // namespace pgroup
