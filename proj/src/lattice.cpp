#include <algorithm>
#include <unordered_set>

#include "pgroup/errors.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

// Layered cyclic extension: subgroups of order p^(k+1) arise as <H, g> with
// H of order p^k, g in N(H) \ H and g^p in H.  Candidates are filtered to
// one representative per coset gH (the generated subgroup and the power
// condition only depend on the coset), and results are deduplicated by
// bit-set identity.
std::vector<Subgroup> all_subgroups(const Subgroup& s, std::int64_t lattice_cap) {
  if (s.order() > lattice_cap)
    throw LatticeCapExceeded("subgroup lattice of a group of order " +
                             std::to_string(s.order()) + " exceeds the cap " +
                             std::to_string(lattice_cap));
  const ConcreteGroup& g = *s.group;
  const std::int64_t p = g.prime();

  std::vector<Subgroup> result;
  std::unordered_set<Bitset, BitsetHash> seen;

  {
    Subgroup triv = trivial_subgroup(s.group);
    seen.insert(triv.members);
    result.push_back(std::move(triv));
  }

  std::vector<Subgroup> layer = {result.front()};
  std::vector<std::vector<int>> lmul;
  std::vector<int> chain;
  while (!layer.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : layer) {
      if (h.order() * p > s.order()) continue;
      const std::vector<int> label = left_coset_labels(g, h);
      lmul.resize(h.gens.size());
      for (std::size_t i = 0; i < h.gens.size(); ++i) g.fill_left_mul(h.gens[i], lmul[i]);

      std::unordered_set<int> done;
      s.members.for_each([&](int cand) {
        if (h.contains(cand)) return;
        for (const auto& lm : lmul)  // cand must normalize h
          if (label[static_cast<std::size_t>(lm[static_cast<std::size_t>(cand)])] !=
              label[static_cast<std::size_t>(cand)])
            return;
        if (!done.insert(label[static_cast<std::size_t>(cand)]).second) return;
        if (!h.contains(g.pow(cand, p))) return;

        Bitset bits = h.members;
        chain.clear();
        h.members.for_each([&](int x) { chain.push_back(x); });
        for (std::int64_t i = 1; i < p; ++i) {
          for (int& x : chain) {
            x = g.mul(x, cand);
            bits.set(static_cast<std::size_t>(x));
          }
        }
        if (static_cast<std::int64_t>(bits.count()) != h.order() * p)
          throw InternalInconsistency("cyclic extension has unexpected order");
        if (seen.insert(bits).second) {
          Subgroup ext{s.group, std::move(bits), h.gens};
          ext.gens.push_back(cand);
          next.push_back(std::move(ext));
        }
      });
    }
    std::sort(next.begin(), next.end());
    result.insert(result.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members.lex_less(b.members);
  });
  return result;
}

}  // namespace pgroup
