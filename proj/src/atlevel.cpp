#include "pgroup/atlevel.hpp"

#include <algorithm>

#include "pgroup/errors.hpp"

namespace pgroup {

namespace {

int int_log(std::int64_t n, std::int64_t p) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

bool is_minimal_nonabelian(const Subgroup& s) {
  const std::int64_t p = s.group->prime();

  bool by_definition = !is_abelian(s);
  if (by_definition) {
    for (const Subgroup& m : maximal_subgroups(s)) {
      if (!is_abelian(m)) {
        by_definition = false;
        break;
      }
    }
  }

  const int d = min_gens(s);
  const bool by_derived = d == 2 && derived_subgroup(s).order() == p;
  const bool by_center = d == 2 && center(s).members == frattini(s).members;

  if (by_definition != by_derived || by_derived != by_center)
    throw InternalInconsistency("minimal non-abelian criteria disagree");
  return by_definition;
}

LevelledLattice levelled_lattice(const Subgroup& s, std::int64_t lattice_cap) {
  LevelledLattice out;
  out.subgroups = all_subgroups(s, lattice_cap);
  const std::int64_t p = s.group->prime();
  const std::size_t n = out.subgroups.size();

  std::vector<bool> abelian(n);
  for (std::size_t i = 0; i < n; ++i) abelian[i] = is_abelian(out.subgroups[i]);

  // Lattice is sorted by order, so a non-abelian member is minimal
  // non-abelian iff no previously found one sits strictly inside it.
  for (std::size_t i = 0; i < n; ++i) {
    if (abelian[i]) continue;
    bool minimal = true;
    for (std::size_t mi : out.minimal_nonabelian) {
      if (out.subgroups[mi].members.subset_of(out.subgroups[i].members)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      if (!is_minimal_nonabelian(out.subgroups[i]))
        throw InternalInconsistency("lattice minimal non-abelian check disagrees");
      out.minimal_nonabelian.push_back(i);
    }
  }

  out.level.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (abelian[i]) continue;
    // level = log|s| - log|smallest non-abelian subgroup| + 1, realized by
    // the first (smallest) minimal non-abelian member inside s.
    std::int64_t jmin = -1;
    for (std::size_t mi : out.minimal_nonabelian) {
      if (out.subgroups[mi].members.subset_of(out.subgroups[i].members)) {
        jmin = out.subgroups[mi].order();
        break;
      }
    }
    if (jmin < 0) throw InternalInconsistency("non-abelian subgroup without minimal witness");
    out.level[i] = int_log(out.subgroups[i].order(), p) - int_log(jmin, p) + 1;
  }
  return out;
}

int at_level(const Subgroup& s, std::int64_t lattice_cap) {
  return levelled_lattice(s, lattice_cap).level_of_whole();
}

std::int64_t alpha_k(GroupRef g, int k, std::int64_t lattice_cap) {
  const LevelledLattice lat = levelled_lattice(full_subgroup(std::move(g)), lattice_cap);
  std::int64_t count = 0;
  for (int lv : lat.level)
    if (lv == k) ++count;
  return count;
}

AtReport analyze_levels(GroupRef g, std::int64_t lattice_cap) {
  Subgroup full = full_subgroup(g);
  const LevelledLattice lat = levelled_lattice(full, lattice_cap);

  AtReport report;
  report.level = lat.level_of_whole();
  for (int k = 1; k <= report.level; ++k) report.alpha[k] = 0;
  std::size_t a2_index = lat.subgroups.size();
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    const int lv = lat.level[i];
    if (lv >= 1) ++report.alpha[lv];
    if (lv == 2) a2_index = i;
  }
  if (report.alpha_of(2) == 1) {
    report.unique_a2 = lat.subgroups[a2_index];
    report.a2_in_frattini =
        report.unique_a2->members.subset_of(frattini(full).members);
  }
  return report;
}

int OmegaMatrix::zero_principal_minor_count() const {
  int zeros = 0;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [i, j] : pairs) {
    const std::int64_t det =
        static_cast<std::int64_t>(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]) *
            entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] -
        static_cast<std::int64_t>(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
            entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (((det % p) + p) % p == 0) ++zeros;
  }
  return zeros;
}

OmegaMatrix omega_matrix(GroupRef gref) {
  const ConcreteGroup& g = *gref;
  const std::int64_t p = g.prime();
  Subgroup full = full_subgroup(gref);

  if (min_gens(full) != 3) throw PreconditionFailed("omega matrix requires d(G) = 3");
  const Subgroup der = derived_subgroup(full);
  if (der.order() != p * p * p || exponent_of(der) != p)
    throw PreconditionFailed("omega matrix requires G' isomorphic to C_p^3");
  if (!frattini(full).members.subset_of(center(full).members))
    throw PreconditionFailed("omega matrix requires Phi(G) <= Z(G)");

  const QuotientResult q = quotient(gref, der);
  const std::vector<int> qbasis = abelian_basis(full_subgroup(q.quotient));
  if (qbasis.size() != 3) throw InternalInconsistency("G/G' basis is not 3-dimensional");

  OmegaMatrix w;
  w.p = p;
  for (int i = 0; i < 3; ++i) {
    // Deterministic lift: smallest element index in the preimage coset.
    int lift = -1;
    for (std::int64_t x = 0; x < g.order() && lift < 0; ++x)
      if (q.projection[static_cast<std::size_t>(x)] == qbasis[static_cast<std::size_t>(i)])
        lift = static_cast<int>(x);
    w.basis[static_cast<std::size_t>(i)] = lift;
    w.m[static_cast<std::size_t>(i)] =
        int_log(q.quotient->element_order(qbasis[static_cast<std::size_t>(i)]), p);
  }

  const int x = g.commutator(w.basis[1], w.basis[2]);
  const int y = g.commutator(w.basis[2], w.basis[0]);
  const int z = g.commutator(w.basis[0], w.basis[1]);
  {
    const Subgroup sx = closure(gref, {x});
    const Subgroup sxy = closure(gref, {x, y});
    const Subgroup sxyz = closure(gref, {x, y, z});
    if (sx.order() != p || sxy.order() != p * p || sxyz.order() != p * p * p ||
        !(sxyz.members == der.members))
      throw DegenerateCommutators("[a2,a3], [a3,a1], [a1,a2] do not form a basis of G'");
  }

  for (int i = 0; i < 3; ++i) {
    std::int64_t q_i = 1;
    for (int e = 0; e < w.m[static_cast<std::size_t>(i)]; ++e) q_i *= p;
    const int target = g.pow(w.basis[static_cast<std::size_t>(i)], q_i);
    if (!der.contains(target))
      throw InternalInconsistency("a_i^(p^m_i) is not in the derived subgroup");
    bool solved = false;
    for (std::int64_t ex = 0; ex < p && !solved; ++ex)
      for (std::int64_t ey = 0; ey < p && !solved; ++ey)
        for (std::int64_t ez = 0; ez < p && !solved; ++ez) {
          if (g.mul(g.mul(g.pow(x, ex), g.pow(y, ey)), g.pow(z, ez)) != target) continue;
          w.entries[static_cast<std::size_t>(i)] = {static_cast<int>(ex), static_cast<int>(ey),
                                                    static_cast<int>(ez)};
          solved = true;
        }
    if (!solved) throw InternalInconsistency("discrete log in G' failed");
  }
  return w;
}

}  // namespace pgroup
