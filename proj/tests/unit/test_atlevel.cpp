#include "doctest.h"
#include "pgroup/atlevel.hpp"
#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/iso.hpp"
#include "pgroup/verify.hpp"

using namespace pgroup;

namespace {

GroupRef build(const std::string& id, const Params& params) {
  return ConcreteGroup::enumerate(build_catalog(id, params));
}

}  // namespace

TEST_CASE("minimal non-abelian detection") {
  CHECK(is_minimal_nonabelian(full_subgroup(ConcreteGroup::enumerate(d8_presentation()))));
  CHECK(is_minimal_nonabelian(full_subgroup(ConcreteGroup::enumerate(q8_presentation()))));
  CHECK(!is_minimal_nonabelian(full_subgroup(ConcreteGroup::enumerate(abelian_presentation(3, {3, 3})))));
  // the Redei families are minimal non-abelian across a small grid
  for (std::int64_t p : {2, 3}) {
    for (int n = 2; n <= 3; ++n)
      CHECK(is_minimal_nonabelian(
          full_subgroup(ConcreteGroup::enumerate(mp_nm_presentation(p, n, 2)))));
    for (int n = 1; n <= 2; ++n) {
      if (p == 2 && n == 1) continue;
      CHECK(is_minimal_nonabelian(
          full_subgroup(ConcreteGroup::enumerate(mp_nm1_presentation(p, n, 1)))));
    }
  }
  // a minimal non-abelian group times anything is not minimal non-abelian
  CHECK(!is_minimal_nonabelian(full_subgroup(build_label("D8 x C2"))));
}

TEST_CASE("levels of small groups") {
  CHECK(at_level(full_subgroup(ConcreteGroup::enumerate(d8_presentation())), 64) == 1);
  CHECK(at_level(full_subgroup(ConcreteGroup::enumerate(q8_presentation())), 64) == 1);
  CHECK(at_level(full_subgroup(build_label("D8 x C2")), 64) == 2);
  CHECK(at_level(full_subgroup(ConcreteGroup::enumerate(cyclic_presentation(2, 3))), 64) == 0);
  CHECK(at_level(full_subgroup(build("thm3.6.1", {{"p", "2"}})), 64) == 3);
  CHECK(at_level(full_subgroup(build("thm3.6.9", {{"p", "2"}})), 64) == 4);
}

TEST_CASE("level is well defined against the definition") {
  // check both defining clauses straight from the lattice
  for (const auto& [id, params] : std::vector<std::pair<std::string, Params>>{
           {"thm3.6.1", {{"p", "2"}}}, {"thm3.7", {}}}) {
    GroupRef g = build(id, params);
    const LevelledLattice lat = levelled_lattice(full_subgroup(g), 64);
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
      const Subgroup& s = lat.subgroups[i];
      const int t = lat.level[i];
      if (t == 0) continue;
      std::int64_t witness_order = s.order();
      for (int step = 1; step < t; ++step) witness_order /= g->prime();
      bool witness = false;  // non-abelian subgroup of index p^(t-1)
      bool all_small_abelian = true;
      for (std::size_t j = 0; j < lat.subgroups.size(); ++j) {
        if (!lat.subgroups[j].members.subset_of(s.members)) continue;
        if (lat.subgroups[j].order() == witness_order && lat.level[j] > 0) witness = true;
        if (lat.subgroups[j].order() == witness_order / g->prime() && lat.level[j] > 0)
          all_small_abelian = false;
      }
      CHECK(witness);
      CHECK(all_small_abelian);
    }
  }
}

TEST_CASE("alpha counts") {
  CHECK(alpha_k(build("thm3.6.1", {{"p", "2"}}), 2, 64) == 1);
  CHECK(alpha_k(ConcreteGroup::enumerate(abelian_presentation(2, {4, 2})), 2, 64) == 0);
  // alpha_1(D8 x C2) = 2: exactly the two dihedral subgroups of order 8
  AtReport rep = analyze_levels(build_label("D8 x C2"), 64);
  CHECK(rep.level == 2);
  CHECK(rep.alpha_of(1) == 2);
  CHECK(rep.alpha_of(2) == 1);  // the group itself
}

TEST_CASE("unique A2 detection") {
  // Theorem 3.7: K = Phi(G), order 16, inside the Frattini subgroup
  GroupRef g37 = build("thm3.7", {});
  AtReport rep = analyze_levels(g37, 64);
  REQUIRE(rep.unique_a2.has_value());
  CHECK(rep.a2_in_frattini);
  CHECK(rep.unique_a2->order() == 16);
  CHECK(rep.unique_a2->members == frattini(full_subgroup(g37)).members);
  CHECK(is_isomorphic(materialize(*rep.unique_a2), build_label("D8 x C2")));

  // entry (11) with n = 2: K outside Phi(G), isomorphic to D8 x C2
  GroupRef g11 = build("thm3.6.11", {{"p", "2"}, {"n", "2"}});
  AtReport rep11 = analyze_levels(g11, 64);
  REQUIRE(rep11.unique_a2.has_value());
  CHECK(!rep11.a2_in_frattini);
  CHECK(is_isomorphic(materialize(*rep11.unique_a2), build_label("D8 x C2")));

  // D8 x C2 x C2 has more than one A2-subgroup
  AtReport rep_multi = analyze_levels(build_label("D8 x C2 x C2"), 64);
  CHECK(!rep_multi.unique_a2.has_value());
  CHECK(rep_multi.alpha_of(2) > 1);
}

TEST_CASE("omega matrix") {
  // all generators of order p: every row is zero
  const auto hyps = omega_hypothesis_presentations();
  GroupRef w3 = ConcreteGroup::enumerate(hyps[1].second);  // exponent-3 rank 3
  OmegaMatrix w = omega_matrix(w3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(w.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0);
  CHECK(w.zero_principal_minor_count() == 3);

  // the a^9 = [b,c] construction has a nonzero first row
  GroupRef w27 = ConcreteGroup::enumerate(hyps[4].second);
  OmegaMatrix w2 = omega_matrix(w27);
  CHECK(w2.m[0] == 2);
  CHECK(w2.entries[0][0] == 1);
  CHECK(w2.entries[0][1] == 0);
  CHECK(w2.entries[0][2] == 0);
  CHECK(w2.zero_principal_minor_count() == 3);

  // the row equations hold verbatim in G
  for (GroupRef g : {w3, w27}) {
    OmegaMatrix m = omega_matrix(g);
    const int x = g->commutator(m.basis[1], m.basis[2]);
    const int y = g->commutator(m.basis[2], m.basis[0]);
    const int z = g->commutator(m.basis[0], m.basis[1]);
    for (int i = 0; i < 3; ++i) {
      std::int64_t q = 1;
      for (int e = 0; e < m.m[static_cast<std::size_t>(i)]; ++e) q *= g->prime();
      const int lhs = g->pow(m.basis[static_cast<std::size_t>(i)], q);
      const int rhs = g->mul(
          g->mul(g->pow(x, m.entries[static_cast<std::size_t>(i)][0]), g->pow(y, m.entries[static_cast<std::size_t>(i)][1])),
          g->pow(z, m.entries[static_cast<std::size_t>(i)][2]));
      CHECK(lhs == rhs);
    }
  }

  // hypotheses are enforced
  CHECK_THROWS_AS(omega_matrix(ConcreteGroup::enumerate(d8_presentation())), PreconditionFailed);
  CHECK_THROWS_AS(omega_matrix(build("thm3.6.1", {{"p", "2"}})), PreconditionFailed);
}

TEST_CASE("every A_t group in a sample contains an A_(t-1) subgroup of index p") {
  for (const auto& [id, params] : std::vector<std::pair<std::string, Params>>{
           {"thm3.6.9", {{"p", "2"}}}, {"thm3.7", {}}, {"thm3.6.15", {{"p", "3"}}}}) {
    GroupRef g = build(id, params);
    const LevelledLattice lat = levelled_lattice(full_subgroup(g), 256);
    const int t = lat.level_of_whole();
    REQUIRE(t >= 2);
    bool found = false;
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
      if (lat.subgroups[i].order() * g->prime() == g->order() && lat.level[i] == t - 1)
        found = true;
    CHECK(found);
  }
}
