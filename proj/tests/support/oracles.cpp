#include "support/oracles.hpp"

#include <stdexcept>

namespace testsupport {

namespace {

std::uint64_t close_mask(std::uint64_t seed, int n, const std::function<int(int, int)>& mul) {
  std::uint64_t cur = seed | 1;  // identity
  while (true) {
    std::uint64_t next = cur;
    for (int x = 0; x < n; ++x) {
      if (!((cur >> x) & 1)) continue;
      for (int y = 0; y < n; ++y) {
        if (!((cur >> y) & 1)) continue;
        next |= std::uint64_t{1} << mul(x, y);
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

std::set<std::uint64_t> oracle_all_subgroups(int n, const std::function<int(int, int)>& mul) {
  if (n > 64) throw std::runtime_error("oracle limited to order 64");
  std::set<std::uint64_t> subgroups;
  subgroups.insert(close_mask(1, n, mul));
  // Closure of every single element, then extend until fixpoint.
  for (int x = 0; x < n; ++x)
    subgroups.insert(close_mask(std::uint64_t{1} << x, n, mul));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::set<std::uint64_t> snapshot = subgroups;
    for (std::uint64_t h : snapshot) {
      for (int x = 0; x < n; ++x) {
        if ((h >> x) & 1) continue;
        const std::uint64_t ext = close_mask(h | (std::uint64_t{1} << x), n, mul);
        if (subgroups.insert(ext).second) grew = true;
      }
    }
  }
  return subgroups;
}

std::set<std::uint64_t> oracle_all_subgroups(const TableGroup& t) {
  return oracle_all_subgroups(t.n, [&t](int x, int y) {
    return t.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  });
}

std::set<std::uint64_t> oracle_all_subgroups(const pgroup::ConcreteGroup& g) {
  return oracle_all_subgroups(static_cast<int>(g.order()),
                              [&g](int x, int y) { return g.mul(x, y); });
}

pgroup::Subgroup oracle_derived(const pgroup::Subgroup& s) {
  const pgroup::ConcreteGroup& g = *s.group;
  std::vector<int> seed;
  s.members.for_each([&](int x) {
    s.members.for_each([&](int y) { seed.push_back(g.commutator(x, y)); });
  });
  return pgroup::closure(s.group, std::move(seed));
}

std::vector<int> oracle_center(const pgroup::ConcreteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) out.push_back(x);
  }
  return out;
}

}  // namespace testsupport
