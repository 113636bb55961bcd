#include <set>

#include "doctest.h"
#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/structure.hpp"
#include "support/oracles.hpp"

using namespace pgroup;
using namespace testsupport;

namespace {

std::set<std::uint64_t> lattice_masks(const std::vector<Subgroup>& lattice) {
  std::set<std::uint64_t> masks;
  for (const Subgroup& s : lattice) {
    std::uint64_t m = 0;
    s.members.for_each([&](int x) { m |= std::uint64_t{1} << x; });
    masks.insert(m);
  }
  return masks;
}

}  // namespace

TEST_CASE("subgroup counts for the order-8 models come from the oracle") {
  const TableGroup d8 = d8_table();
  const TableGroup q8 = q8_table();
  const auto d8_subs = oracle_all_subgroups(d8);
  const auto q8_subs = oracle_all_subgroups(q8);
  CHECK(d8_subs.size() == 10);
  CHECK(q8_subs.size() == 6);

  // the cyclic-extension lattice agrees on the engine-built copies
  GroupRef d8g = ConcreteGroup::enumerate(d8_presentation());
  GroupRef q8g = ConcreteGroup::enumerate(q8_presentation());
  CHECK(lattice_masks(all_subgroups(full_subgroup(d8g), 64)) == oracle_all_subgroups(*d8g));
  CHECK(lattice_masks(all_subgroups(full_subgroup(q8g), 64)) == oracle_all_subgroups(*q8g));
  CHECK(all_subgroups(full_subgroup(d8g), 64).size() == 10);
  CHECK(all_subgroups(full_subgroup(q8g), 64).size() == 6);
}

TEST_CASE("cyclic groups have a chain of subgroups") {
  GroupRef c = ConcreteGroup::enumerate(cyclic_presentation(5, 1));
  CHECK(all_subgroups(full_subgroup(c), 125).size() == 2);
  GroupRef c27 = ConcreteGroup::enumerate(cyclic_presentation(3, 3));
  CHECK(all_subgroups(full_subgroup(c27), 125).size() == 4);
}

TEST_CASE("lattice equals the oracle on assorted groups of order <= 64") {
  std::vector<std::pair<std::string, Params>> cases = {
      {"thm3.6.1", {{"p", "2"}}},    {"thm3.6.2", {{"p", "2"}}},
      {"thm3.6.9", {{"p", "2"}}},    {"thm3.7", {}},
      {"mp-nm", {{"p", "2"}, {"n", "3"}, {"m", "2"}}},
      {"mp-nm1", {{"p", "3"}, {"n", "1"}, {"m", "1"}}},
      {"thm3.1", {{"p", "2"}, {"h", "q8"}, {"j", "3"}, {"variant", "amalgam"}}},
  };
  for (const auto& [id, params] : cases) {
    GroupRef g = ConcreteGroup::enumerate(build_catalog(id, params));
    REQUIRE(g->order() <= 64);
    CHECK(lattice_masks(all_subgroups(full_subgroup(g), 64)) == oracle_all_subgroups(*g));
  }
  // an abelian case with many subgroups
  GroupRef e16 = ConcreteGroup::enumerate(abelian_presentation(2, {2, 2, 2, 2}));
  CHECK(lattice_masks(all_subgroups(full_subgroup(e16), 64)) == oracle_all_subgroups(*e16));
  CHECK(all_subgroups(full_subgroup(e16), 64).size() == 67);
}

TEST_CASE("lattice output is sorted and duplicate-free") {
  GroupRef g = ConcreteGroup::enumerate(build_catalog("thm3.6.3", {{"p", "2"}}));
  const std::vector<Subgroup> lattice = all_subgroups(full_subgroup(g), 64);
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    const bool order_sorted = lattice[i - 1].order() < lattice[i].order();
    const bool same_order_sorted = lattice[i - 1].order() == lattice[i].order() &&
                                   lattice[i - 1].members.lex_less(lattice[i].members);
    CHECK((order_sorted || same_order_sorted));
  }
}

TEST_CASE("the lattice cap is enforced") {
  GroupRef g = ConcreteGroup::enumerate(build_catalog("thm3.6.1", {{"p", "2"}}));
  CHECK_THROWS_AS(all_subgroups(full_subgroup(g), 16), LatticeCapExceeded);
}

TEST_CASE("sublattices work on subgroups") {
  GroupRef g = ConcreteGroup::enumerate(build_catalog("thm3.7", {}));
  const Presentation& pres = g->source();
  std::vector<int> seed;
  for (const char* w : {"a^2", "c", "d"}) seed.push_back(g->eval_word(parse_word(w, pres)));
  Subgroup k = closure(g, seed);
  const std::vector<Subgroup> sub = all_subgroups(k, 64);
  // every member is inside k
  for (const Subgroup& s : sub) CHECK(s.members.subset_of(k.members));
  // and matches the subgroup count of D8 x C2
  GroupRef model = build_label("D8 x C2");
  CHECK(sub.size() == all_subgroups(full_subgroup(model), 64).size());
}
