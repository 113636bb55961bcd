#include "doctest.h"
#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/iso.hpp"
#include "support/hand_models.hpp"

using namespace pgroup;
using namespace testsupport;

TEST_CASE("fingerprints separate the order-8 groups") {
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  GroupRef q8 = ConcreteGroup::enumerate(q8_presentation());
  CHECK(fingerprint(d8) != fingerprint(q8));
  GroupRef c4 = ConcreteGroup::enumerate(cyclic_presentation(2, 2));
  GroupRef e4 = ConcreteGroup::enumerate(abelian_presentation(2, {2, 2}));
  CHECK(fingerprint(c4) != fingerprint(e4));
  // trivial quotient preserves the fingerprint
  QuotientResult q = quotient(d8, trivial_subgroup(d8));
  CHECK(fingerprint(d8) == fingerprint(q.quotient));
}

TEST_CASE("isomorphism testing") {
  GroupRef d8 = ConcreteGroup::enumerate(d8_presentation());
  GroupRef q8 = ConcreteGroup::enumerate(q8_presentation());
  CHECK(is_isomorphic(d8, d8));
  CHECK(!is_isomorphic(d8, q8));
  CHECK(is_isomorphic(d8, table_to_group(d8_table(), {1, 4})));
  CHECK(is_isomorphic(q8, table_to_group(q8_table(), {2, 4})));

  GroupRef c8 = ConcreteGroup::enumerate(cyclic_presentation(2, 3));
  GroupRef c42 = ConcreteGroup::enumerate(abelian_presentation(2, {4, 2}));
  GroupRef c222 = ConcreteGroup::enumerate(abelian_presentation(2, {2, 2, 2}));
  CHECK(!is_isomorphic(c8, c42));
  CHECK(!is_isomorphic(c42, c222));

  // three builds of D8 x C2 are pairwise isomorphic (transitivity sample)
  GroupRef a = build_label("D8 x C2");
  GroupRef b = direct_product(*d8, *ConcreteGroup::enumerate(cyclic_presentation(2, 1)));
  GroupRef c = central_product(*d8, *ConcreteGroup::enumerate(abelian_presentation(2, {2, 2})),
                               {{d8->pow(d8->generator(0), 2),
                                 ConcreteGroup::enumerate(abelian_presentation(2, {2, 2}))
                                     ->generator(0)}});
  // (the central product above amalgamates Z(D8) with one C2 factor)
  CHECK(is_isomorphic(a, b));
  CHECK(is_isomorphic(b, c));
  CHECK(is_isomorphic(a, c));

  // isomorphic pairs share fingerprints
  CHECK(fingerprint(a) == fingerprint(b));
  CHECK(fingerprint(b) == fingerprint(c));

  CHECK_THROWS_AS(
      is_isomorphic(ConcreteGroup::enumerate(abelian_presentation(2, {4, 4})),
                    ConcreteGroup::enumerate(abelian_presentation(2, {4, 4})), 8),
      IsoCapExceeded);
}

TEST_CASE("the paper's K for entry (2) is Q8 x C2") {
  GroupRef g = ConcreteGroup::enumerate(build_catalog("thm3.6.2", {{"p", "2"}}));
  const Presentation& pres = g->source();
  std::vector<int> seed;
  for (const char* w : {"a", "c", "x"}) seed.push_back(g->eval_word(parse_word(w, pres)));
  Subgroup k = closure(g, seed);
  CHECK(k.order() == 16);
  CHECK(is_isomorphic(materialize(k), build_label("Q8 x C2")));
  CHECK(!is_isomorphic(materialize(k), build_label("D8 x C2")));
}

TEST_CASE("recognition") {
  CHECK(recognize(ConcreteGroup::enumerate(cyclic_presentation(2, 3))) == "C8");
  CHECK(recognize(ConcreteGroup::enumerate(abelian_presentation(3, {9, 3}))) == "C9 x C3");
  CHECK(recognize(ConcreteGroup::enumerate(d8_presentation())) == "D8");
  CHECK(recognize(ConcreteGroup::enumerate(q8_presentation())) == "Q8");
  // M2(2,1) is D8: the alias resolves to the canonical name
  CHECK(recognize(ConcreteGroup::enumerate(mp_nm_presentation(2, 2, 1))) == "D8");

  // named labels round-trip through recognition
  for (const char* label :
       {"M2(3,1)", "M3(1,1,1)", "M3(2,1)", "M2(2,2)", "M2(2,1,1)", "D8 x C2", "Q8 x C2",
        "M3(2,1) x C3", "M3(1,1,1) x C3", "D8 * C4", "M2(2,2,1) * C4"}) {
    CHECK(recognize(build_label(label)) == label);
  }
  // D8 * C4 and Q8 * C4 are the same group; the canonical name wins
  CHECK(recognize(build_label("Q8 * C4")) == "D8 * C4");
}
