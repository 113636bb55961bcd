#include <algorithm>
#include <map>
#include <numeric>

#include "pgroup/errors.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

namespace {

std::int64_t int_log(std::int64_t n, std::int64_t p) {
  int e = 0;
  while (n % p == 0 && n > 1) {
    n /= p;
    ++e;
  }
  if (n != 1) throw InternalInconsistency("subgroup order is not a power of p");
  return e;
}

// Orbit closure of `elems` under right multiplication by `gens`,
// restarting the sweep whenever a generator is appended.
void close_under(const ConcreteGroup& g, Bitset& members, std::vector<int>& elems,
                 const std::vector<int>& gens) {
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int s : gens) {
      const int y = g.mul(elems[head], s);
      if (!members.test(static_cast<std::size_t>(y))) {
        members.set(static_cast<std::size_t>(y));
        elems.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup trivial_subgroup(GroupRef g) {
  Bitset b(static_cast<std::size_t>(g->order()));
  b.set(0);
  return {std::move(g), std::move(b), {}};
}

Subgroup full_subgroup(GroupRef g) {
  Bitset b(static_cast<std::size_t>(g->order()));
  for (std::int64_t i = 0; i < g->order(); ++i) b.set(static_cast<std::size_t>(i));
  std::vector<int> gens;
  for (int gi = 0; gi < g->num_generators(); ++gi) {
    const int e = g->generator(gi);
    if (e != 0 && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  return {std::move(g), std::move(b), std::move(gens)};
}

Subgroup closure(GroupRef g, std::vector<int> seed) {
  const ConcreteGroup& grp = *g;
  Bitset members(static_cast<std::size_t>(grp.order()));
  members.set(0);
  std::vector<int> elems = {0};
  std::vector<int> gens;
  for (int s : seed) {
    if (s == 0 || members.test(static_cast<std::size_t>(s))) continue;
    gens.push_back(s);
    members.set(static_cast<std::size_t>(s));
    elems.push_back(s);
    close_under(grp, members, elems, gens);
  }
  return {std::move(g), std::move(members), std::move(gens)};
}

Subgroup subgroup_from_members(GroupRef g, const Bitset& members) {
  std::vector<int> seed;
  members.for_each([&](int x) { seed.push_back(x); });
  Subgroup s = closure(std::move(g), std::move(seed));
  if (!(s.members == members))
    throw InternalInconsistency("member set is not closed under multiplication");
  return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Bitset m = a.members;
  m &= b.members;
  return subgroup_from_members(a.group, m);
}

bool is_abelian(const Subgroup& s) {
  const ConcreteGroup& g = *s.group;
  for (std::size_t i = 0; i < s.gens.size(); ++i)
    for (std::size_t j = i + 1; j < s.gens.size(); ++j)
      if (g.mul(s.gens[i], s.gens[j]) != g.mul(s.gens[j], s.gens[i])) return false;
  return true;
}

namespace {

// Closes `start` under conjugation by `conj_gens`, returning the normal
// closure as a subgroup.
Subgroup conjugation_closure(GroupRef gref, Subgroup start, const std::vector<int>& conj_gens) {
  const ConcreteGroup& g = *gref;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> extra;
    start.members.for_each([&](int t) {
      for (int c : conj_gens) {
        const int y = g.conjugate(t, c);
        if (!start.members.test(static_cast<std::size_t>(y))) extra.push_back(y);
      }
    });
    if (!extra.empty()) {
      std::vector<int> seed = start.gens;
      seed.insert(seed.end(), extra.begin(), extra.end());
      start = closure(gref, std::move(seed));
      changed = true;
    }
  }
  return start;
}

}  // namespace

Subgroup derived_subgroup(const Subgroup& s) {
  const ConcreteGroup& g = *s.group;
  std::vector<int> seed;
  for (std::size_t i = 0; i < s.gens.size(); ++i)
    for (std::size_t j = i + 1; j < s.gens.size(); ++j)
      seed.push_back(g.commutator(s.gens[i], s.gens[j]));
  return conjugation_closure(s.group, closure(s.group, std::move(seed)), s.gens);
}

Subgroup center(const Subgroup& s) {
  const ConcreteGroup& g = *s.group;
  Bitset z(static_cast<std::size_t>(g.order()));
  s.members.for_each([&](int x) {
    for (int sg : s.gens)
      if (g.mul(x, sg) != g.mul(sg, x)) return;
    z.set(static_cast<std::size_t>(x));
  });
  return subgroup_from_members(s.group, z);
}

Subgroup centralizer(const Subgroup& ambient, const Subgroup& s) {
  const ConcreteGroup& g = *ambient.group;
  Bitset c(static_cast<std::size_t>(g.order()));
  ambient.members.for_each([&](int x) {
    for (int sg : s.gens)
      if (g.mul(x, sg) != g.mul(sg, x)) return;
    c.set(static_cast<std::size_t>(x));
  });
  return subgroup_from_members(ambient.group, c);
}

std::vector<int> left_coset_labels(const ConcreteGroup& g, const Subgroup& s) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<int> rmul;
  for (int h : s.gens) {
    g.fill_right_mul(h, rmul);
    for (std::size_t x = 0; x < n; ++x) {
      int a = find(static_cast<int>(x));
      int b = find(rmul[x]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const int r = find(static_cast<int>(x));
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
    label[x] = label[static_cast<std::size_t>(r)];
  }
  return label;
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& s) {
  const ConcreteGroup& g = *ambient.group;
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::vector<int> label = left_coset_labels(g, s);
  // x normalizes s iff h*x stays in the coset x*s for every generator h.
  std::vector<std::vector<int>> lmul(s.gens.size());
  for (std::size_t i = 0; i < s.gens.size(); ++i) g.fill_left_mul(s.gens[i], lmul[i]);
  Bitset nm(n);
  ambient.members.for_each([&](int x) {
    for (const auto& lm : lmul)
      if (label[static_cast<std::size_t>(lm[static_cast<std::size_t>(x)])] != label[static_cast<std::size_t>(x)])
        return;
    nm.set(static_cast<std::size_t>(x));
  });
  return subgroup_from_members(ambient.group, nm);
}

bool is_normal(const Subgroup& ambient, const Subgroup& s) {
  const ConcreteGroup& g = *ambient.group;
  for (int sg : s.gens)
    for (int ag : ambient.gens)
      if (!s.members.test(static_cast<std::size_t>(g.conjugate(sg, ag)))) return false;
  return true;
}

Subgroup normal_closure(const Subgroup& ambient, const Subgroup& s) {
  return conjugation_closure(ambient.group, closure(ambient.group, s.gens), ambient.gens);
}

namespace {

Subgroup frattini_formula(const Subgroup& s) {
  const ConcreteGroup& g = *s.group;
  const std::int64_t p = g.prime();
  Subgroup der = derived_subgroup(s);
  std::vector<int> seed = der.gens;
  s.members.for_each([&](int x) { seed.push_back(g.pow(x, p)); });
  return closure(s.group, std::move(seed));
}

std::vector<Subgroup> maximal_subgroups_impl(const Subgroup& s, const Subgroup& phi) {
  const ConcreteGroup& g = *s.group;
  const std::int64_t p = g.prime();

  // Independent lifts of a basis of the elementary abelian quotient s/phi.
  std::vector<int> lifts;
  Subgroup span = phi;
  s.members.for_each([&](int x) {
    if (span.members.test(static_cast<std::size_t>(x))) return;
    lifts.push_back(x);
    std::vector<int> seed = span.gens;
    seed.push_back(x);
    span = closure(s.group, std::move(seed));
  });
  const int d = static_cast<int>(lifts.size());
  if (span.order() != s.order())
    throw InternalInconsistency("Frattini lift span does not recover the subgroup");

  std::vector<Subgroup> out;
  if (d == 0) return out;

  // One normalized functional per hyperplane: first nonzero coefficient 1.
  std::vector<int> phi_vec(static_cast<std::size_t>(d), 0);
  while (true) {
    int j = static_cast<int>(phi_vec.size()) - 1;
    while (j >= 0 && phi_vec[static_cast<std::size_t>(j)] == static_cast<int>(p) - 1)
      phi_vec[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++phi_vec[static_cast<std::size_t>(j)];
    int pivot = 0;
    while (phi_vec[static_cast<std::size_t>(pivot)] == 0) ++pivot;
    if (phi_vec[static_cast<std::size_t>(pivot)] != 1) continue;

    std::vector<int> seed = phi.gens;
    for (int i = 0; i < d; ++i) {
      if (i == pivot) continue;
      const int ci = phi_vec[static_cast<std::size_t>(i)];
      // kernel vector e_i - c_i * e_pivot
      seed.push_back(g.mul(lifts[static_cast<std::size_t>(i)],
                           g.pow(lifts[static_cast<std::size_t>(pivot)], p - ci)));
    }
    Subgroup m = closure(s.group, std::move(seed));
    if (m.order() * p != s.order())
      throw InternalInconsistency("hyperplane preimage has wrong index");
    out.push_back(std::move(m));
  }

  std::int64_t expected = 0;
  std::int64_t pk = 1;
  for (int i = 0; i < d; ++i) {
    expected += pk;
    pk *= p;
  }
  if (static_cast<std::int64_t>(out.size()) != expected)
    throw InternalInconsistency("maximal subgroup count does not match 1+p+...+p^(d-1)");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subgroup> maximal_subgroups(const Subgroup& s) {
  return maximal_subgroups_impl(s, frattini_formula(s));
}

Subgroup frattini(const Subgroup& s) {
  Subgroup phi = frattini_formula(s);
  const std::vector<Subgroup> maxes = maximal_subgroups_impl(s, phi);
  Bitset inter = s.members;
  for (const Subgroup& m : maxes) inter &= m.members;
  if (!(inter == phi.members))
    throw InternalInconsistency(
        "Frattini disagreement: derived*p-th-powers vs intersection of maximal subgroups");
  return phi;
}

Subgroup omega_s(const Subgroup& s, int level) {
  const ConcreteGroup& g = *s.group;
  std::int64_t bound = 1;
  for (int i = 0; i < level; ++i) bound *= g.prime();
  std::vector<int> seed;
  s.members.for_each([&](int x) {
    if (g.element_order(x) <= bound) seed.push_back(x);
  });
  return closure(s.group, std::move(seed));
}

Subgroup agemo_s(const Subgroup& s, int level) {
  const ConcreteGroup& g = *s.group;
  std::int64_t q = 1;
  for (int i = 0; i < level; ++i) q *= g.prime();
  std::vector<int> seed;
  s.members.for_each([&](int x) { seed.push_back(g.pow(x, q)); });
  return closure(s.group, std::move(seed));
}

QuotientResult quotient(GroupRef gref, const Subgroup& n) {
  const ConcreteGroup& g = *gref;
  Subgroup full = full_subgroup(gref);
  if (!is_normal(full, n)) throw NotNormal("quotient by a non-normal subgroup");

  // Right cosets n*x are the orbits of left multiplication by n.
  const std::size_t sz = static_cast<std::size_t>(g.order());
  std::vector<int> parent(sz);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<int> lmul;
  for (int h : n.gens) {
    g.fill_left_mul(h, lmul);
    for (std::size_t x = 0; x < sz; ++x) {
      int a = find(static_cast<int>(x));
      int b = find(lmul[x]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> label(sz, -1);
  std::vector<int> rep;
  for (std::size_t x = 0; x < sz; ++x) {
    const int r = find(static_cast<int>(x));
    if (label[static_cast<std::size_t>(r)] < 0) {
      label[static_cast<std::size_t>(r)] = static_cast<int>(rep.size());
      rep.push_back(r);
    }
    label[x] = label[static_cast<std::size_t>(r)];
  }

  const std::size_t q = rep.size();
  if (static_cast<std::int64_t>(q) * n.order() != g.order())
    throw InternalInconsistency("coset count times kernel order misses the group order");

  std::vector<std::vector<int>> actions(static_cast<std::size_t>(g.num_generators()),
                                        std::vector<int>(q, -1));
  for (int gi = 0; gi < g.num_generators(); ++gi) {
    auto& act = actions[static_cast<std::size_t>(gi)];
    for (std::size_t x = 0; x < sz; ++x) {
      const int c = label[x];
      const int v = label[static_cast<std::size_t>(g.apply_gen(static_cast<int>(x), gi))];
      if (act[static_cast<std::size_t>(c)] == -1)
        act[static_cast<std::size_t>(c)] = v;
      else if (act[static_cast<std::size_t>(c)] != v)
        throw InternalInconsistency("coset action is not well defined");
    }
  }

  GroupRef quot = ConcreteGroup::from_actions(g.prime(), std::move(actions), gref->source_ptr());

  // Transport each element's spanning-tree word into the quotient.
  std::vector<int> proj(sz, 0);
  for (std::size_t x = 1; x < sz; ++x)
    proj[x] = quot->apply_col(proj[static_cast<std::size_t>(g.tree_parent(static_cast<int>(x)))],
                              g.tree_col(static_cast<int>(x)));
  return {std::move(quot), std::move(proj)};
}

Subgroup project_subgroup(const QuotientResult& q, const Subgroup& s) {
  Bitset image(static_cast<std::size_t>(q.quotient->order()));
  s.members.for_each([&](int x) { image.set(static_cast<std::size_t>(q.projection[static_cast<std::size_t>(x)])); });
  return subgroup_from_members(q.quotient, image);
}

GroupRef materialize(const Subgroup& s) {
  const ConcreteGroup& g = *s.group;
  const std::vector<int> elems = s.members.to_vector();  // ascending, identity first
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);

  std::vector<int> gens = s.gens;
  if (gens.empty()) gens.push_back(0);
  std::vector<std::vector<int>> actions(gens.size(), std::vector<int>(elems.size()));
  std::vector<int> rmul;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    g.fill_right_mul(gens[gi], rmul);
    for (std::size_t i = 0; i < elems.size(); ++i)
      actions[gi][i] = index[static_cast<std::size_t>(rmul[static_cast<std::size_t>(elems[i])])];
  }
  return ConcreteGroup::from_actions(g.prime(), std::move(actions), nullptr);
}

int min_gens(const Subgroup& s) {
  if (s.order() == 1) return 0;
  const Subgroup phi = frattini_formula(s);
  return static_cast<int>(int_log(s.order() / phi.order(), s.group->prime()));
}

int nilpotency_class(const Subgroup& s) {
  if (s.order() == 1) return 0;
  const ConcreteGroup& g = *s.group;
  int cls = 1;
  Subgroup gamma = derived_subgroup(s);
  while (gamma.order() > 1) {
    ++cls;
    std::vector<int> seed;
    for (int a : gamma.gens)
      for (int b : s.gens) seed.push_back(g.commutator(a, b));
    gamma = conjugation_closure(s.group, closure(s.group, std::move(seed)), s.gens);
  }
  return cls;
}

std::int64_t exponent_of(const Subgroup& s) {
  const ConcreteGroup& g = *s.group;
  std::int64_t e = 1;
  s.members.for_each([&](int x) { e = std::max(e, g.element_order(x)); });
  return e;
}

std::vector<int> abelian_basis(const Subgroup& s) {
  if (!is_abelian(s)) throw NotAbelian("abelian basis of a non-abelian subgroup");
  const ConcreteGroup& g = *s.group;
  const std::int64_t p = g.prime();

  std::vector<int> basis;
  Subgroup span = trivial_subgroup(s.group);
  while (span.order() < s.order()) {
    // Element of maximal order independent of the current span; for
    // p-groups independence reduces to x^(o/p) lying outside the span.
    std::map<std::int64_t, std::vector<int>, std::greater<>> by_order;
    s.members.for_each([&](int x) {
      if (!span.members.test(static_cast<std::size_t>(x))) by_order[g.element_order(x)].push_back(x);
    });
    int chosen = -1;
    for (const auto& [ord, xs] : by_order) {
      for (int x : xs) {
        if (span.members.test(static_cast<std::size_t>(g.pow(x, ord / p)))) continue;
        chosen = x;
        break;
      }
      if (chosen >= 0) break;
    }
    if (chosen < 0) throw InternalInconsistency("no independent element found in abelian basis");
    basis.push_back(chosen);
    std::vector<int> seed = span.gens;
    seed.push_back(chosen);
    span = closure(s.group, std::move(seed));
  }
  return basis;
}

std::vector<std::int64_t> abelian_invariants(const Subgroup& s) {
  std::vector<std::int64_t> invs;
  for (int x : abelian_basis(s)) invs.push_back(s.group->element_order(x));
  return invs;
}

}  // namespace pgroup
