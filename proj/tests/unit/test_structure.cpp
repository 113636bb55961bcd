#include "doctest.h"
#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/iso.hpp"
#include "pgroup/structure.hpp"
#include "support/oracles.hpp"

using namespace pgroup;
using namespace testsupport;

namespace {

GroupRef build(const std::string& id, const Params& params) {
  return ConcreteGroup::enumerate(build_catalog(id, params));
}

}  // namespace

TEST_CASE("closure basics") {
  GroupRef g = build("thm3.7", {});
  CHECK(closure(g, {}).order() == 1);
  std::vector<int> gens;
  for (int i = 0; i < g->num_generators(); ++i) gens.push_back(g->generator(i));
  CHECK(closure(g, gens).order() == g->order());
  // the A2-subgroup generators from the theorem give a subgroup of order 16
  const Presentation& pres = g->source();
  std::vector<int> seed;
  for (const char* w : {"a^2", "c", "d"}) seed.push_back(g->eval_word(parse_word(w, pres)));
  CHECK(closure(g, seed).order() == 16);
}

TEST_CASE("derived subgroups match the all-pairs oracle") {
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  Subgroup der = derived_subgroup(full_subgroup(d8));
  CHECK(der.order() == 2);
  CHECK(der.members == oracle_derived(full_subgroup(d8)).members);

  GroupRef g1 = build("thm3.6.1", {{"p", "2"}});
  Subgroup der1 = derived_subgroup(full_subgroup(g1));
  CHECK(der1.order() == 4);
  CHECK(der1.members == oracle_derived(full_subgroup(g1)).members);

  // abelian groups have trivial derived subgroup
  GroupRef ab = ConcreteGroup::enumerate(abelian_presentation(3, {9, 3}));
  CHECK(derived_subgroup(full_subgroup(ab)).order() == 1);
}

TEST_CASE("Theorem 3.1 groups have |G'| = p") {
  GroupRef g = build("thm3.1", {{"p", "2"}, {"h", "d8"}, {"j", "2"}, {"variant", "direct"}});
  CHECK(g->order() == 32);
  CHECK(derived_subgroup(full_subgroup(g)).order() == 2);
  CHECK(min_gens(full_subgroup(g)) == 3);
  // d = 3 over p = 2 gives 7 maximal subgroups
  CHECK(maximal_subgroups(full_subgroup(g)).size() == 7);
}

TEST_CASE("center and centralizer") {
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  Subgroup z = center(full_subgroup(d8));
  CHECK(z.order() == 2);
  CHECK(z.members.to_vector() == oracle_center(*d8));

  GroupRef ab = ConcreteGroup::enumerate(abelian_presentation(2, {4, 2}));
  CHECK(center(full_subgroup(ab)).order() == 8);

  // centralizer of the center is everything
  CHECK(centralizer(full_subgroup(d8), z).order() == 8);
}

TEST_CASE("normalizer, normality and normal closure") {
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  Subgroup full = full_subgroup(d8);
  // reflections generate non-normal order-2 subgroups with normalizer of order 4
  const int s = d8->generator(1);
  Subgroup refl = closure(d8, {s});
  REQUIRE(refl.order() == 2);
  CHECK(!is_normal(full, refl));
  CHECK(normalizer(full, refl).order() == 4);
  Subgroup nc = normal_closure(full, refl);
  CHECK(nc.order() == 4);
  CHECK(is_normal(full, nc));
  // rotation subgroup is normal
  Subgroup rot = closure(d8, {d8->generator(0)});
  CHECK(is_normal(full, rot));
  CHECK(normalizer(full, rot).order() == 8);
}

TEST_CASE("left coset labels partition the group") {
  GroupRef g = build("thm3.6.3", {{"p", "2"}});
  Subgroup h = closure(g, {g->generator(2)});
  const std::vector<int> label = left_coset_labels(*g, h);
  std::map<int, int> sizes;
  for (int l : label) ++sizes[l];
  CHECK(static_cast<std::int64_t>(sizes.size()) == g->order() / h.order());
  for (const auto& [l, sz] : sizes) CHECK(sz == h.order());
}

TEST_CASE("frattini subgroup") {
  // elementary abelian: trivial Frattini subgroup
  GroupRef e = ConcreteGroup::enumerate(abelian_presentation(5, {5, 5}));
  CHECK(frattini(full_subgroup(e)).order() == 1);
  // Phi(D8) = <a^2>
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  Subgroup phi = frattini(full_subgroup(d8));
  CHECK(phi.order() == 2);
  CHECK(phi.contains(d8->pow(d8->generator(0), 2)));
  // Phi of the Theorem 3.7 group has order 16
  GroupRef g = build("thm3.7", {});
  CHECK(frattini(full_subgroup(g)).order() == 16);
}

TEST_CASE("omega and agemo") {
  GroupRef c4 = ConcreteGroup::enumerate(cyclic_presentation(2, 2));
  CHECK(agemo_s(full_subgroup(c4), 1).order() == 2);
  CHECK(omega_s(full_subgroup(c4), 2).order() == 4);

  GroupRef e9 = ConcreteGroup::enumerate(abelian_presentation(3, {3, 3}));
  CHECK(omega_s(full_subgroup(e9), 1).order() == 9);

  // agemo_2(K) has index 2^5 in K for the entry (6) family
  GroupRef g = ConcreteGroup::enumerate(build_catalog("thm3.6.6", {{"p", "2"}, {"n", "5"}}));
  const Presentation& pres = g->source();
  std::vector<int> seed;
  for (const char* w : {"a^2", "b", "c"}) seed.push_back(g->eval_word(parse_word(w, pres)));
  Subgroup k = closure(g, seed);
  Subgroup u2 = agemo_s(k, 2);
  CHECK(k.order() / u2.order() == 32);
  CHECK(u2.members == closure(g, {g->eval_word(parse_word("a^8", pres))}).members);
}

TEST_CASE("quotients") {
  GroupRef g = build("thm3.6.1", {{"p", "2"}});
  Subgroup full = full_subgroup(g);
  // quotient by the trivial subgroup is isomorphic to g
  QuotientResult qt = quotient(g, trivial_subgroup(g));
  CHECK(qt.quotient->order() == g->order());
  CHECK(is_isomorphic(g, qt.quotient));
  // quotient by the whole group is trivial
  CHECK(quotient(g, full).quotient->order() == 1);
  // projection is a homomorphism, exhaustively
  Subgroup der = derived_subgroup(full);
  QuotientResult q = quotient(g, der);
  CHECK(q.quotient->order() * der.order() == g->order());
  for (int x = 0; x < g->order(); ++x)
    for (int y = 0; y < g->order(); ++y)
      CHECK(q.projection[static_cast<std::size_t>(g->mul(x, y))] ==
            q.quotient->mul(q.projection[static_cast<std::size_t>(x)],
                            q.projection[static_cast<std::size_t>(y)]));
  // non-normal kernels are rejected
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  Subgroup refl = closure(d8, {d8->generator(1)});
  CHECK_THROWS_AS(quotient(d8, refl), NotNormal);
}

TEST_CASE("min_gens, class, exponent, abelian invariants") {
  GroupRef e8 = ConcreteGroup::enumerate(abelian_presentation(2, {2, 2, 2}));
  CHECK(min_gens(full_subgroup(e8)) == 3);
  CHECK(nilpotency_class(full_subgroup(e8)) == 1);
  CHECK(exponent_of(full_subgroup(e8)) == 2);
  CHECK(abelian_invariants(full_subgroup(e8)) == std::vector<std::int64_t>{2, 2, 2});

  GroupRef ab = ConcreteGroup::enumerate(abelian_presentation(2, {4, 2}));
  CHECK(abelian_invariants(full_subgroup(ab)) == std::vector<std::int64_t>{4, 2});
  GroupRef c8 = ConcreteGroup::enumerate(cyclic_presentation(2, 3));
  CHECK(abelian_invariants(full_subgroup(c8)) == std::vector<std::int64_t>{8});
  CHECK(maximal_subgroups(full_subgroup(c8)).size() == 1);

  // M_p(n,m) has class 2 on a small grid
  for (std::int64_t p : {2, 3}) {
    for (int n = 2; n <= 3; ++n) {
      for (int m = 1; m <= 2; ++m) {
        GroupRef g = ConcreteGroup::enumerate(mp_nm_presentation(p, n, m));
        CHECK(nilpotency_class(full_subgroup(g)) == 2);
        CHECK(min_gens(full_subgroup(g)) == 2);
      }
    }
  }
  CHECK_THROWS_AS(abelian_invariants(full_subgroup(ConcreteGroup::enumerate(d8_presentation()))),
                  NotAbelian);
}

TEST_CASE("direct and central products") {
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  GroupRef c4 = ConcreteGroup::enumerate(cyclic_presentation(2, 2));
  GroupRef c2 = ConcreteGroup::enumerate(cyclic_presentation(2, 1));

  CHECK(direct_product(*d8, *c2)->order() == 16);
  CHECK(direct_product(*d8, *c4)->order() == 32);

  // D8 * C4 amalgamated over the center has order 16
  const int z = d8->pow(d8->generator(0), 2);
  const int c4sq = c4->pow(c4->generator(0), 2);
  GroupRef cp = central_product(*d8, *c4, {{z, c4sq}});
  CHECK(cp->order() == 16);

  // identifying a non-central element is rejected
  CHECK_THROWS_AS(central_product(*d8, *c4, {{d8->generator(1), c4sq}}), BadIdentification);
  // identifying elements of different orders is rejected
  CHECK_THROWS_AS(central_product(*d8, *c4, {{z, c4->generator(0)}}), BadIdentification);
}

TEST_CASE("materialized subgroups behave like groups") {
  GroupRef g = build("thm3.7", {});
  const Presentation& pres = g->source();
  std::vector<int> seed;
  for (const char* w : {"a^2", "c", "d"}) seed.push_back(g->eval_word(parse_word(w, pres)));
  Subgroup k = closure(g, seed);
  GroupRef km = materialize(k);
  CHECK(km->order() == 16);
  CHECK(is_isomorphic(km, build_label("D8 x C2")));
}

TEST_CASE("Lagrange over a lattice") {
  GroupRef g = build("thm3.6.2", {{"p", "2"}});
  for (const Subgroup& s : all_subgroups(full_subgroup(g), 64))
    CHECK(g->order() % s.order() == 0);
}
