#include <random>

#include "doctest.h"
#include "pgroup/catalog.hpp"
#include "pgroup/engine.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/iso.hpp"
#include "support/hand_models.hpp"

using namespace pgroup;
using namespace testsupport;

TEST_CASE("hand-built dihedral table is non-abelian with the expected orders") {
  const TableGroup d8 = d8_table();
  const int r = 1, s = 4;
  CHECK(d8.mul[r][s] != d8.mul[s][r]);
  CHECK(d8.element_order(r) == 4);
  CHECK(d8.element_order(s) == 2);
  int involutions = 0;
  for (int x = 0; x < 8; ++x)
    if (d8.element_order(x) == 2) ++involutions;
  CHECK(involutions == 5);
}

TEST_CASE("hand-built quaternion table has exactly one involution") {
  const TableGroup q8 = q8_table();
  int involutions = 0;
  for (int x = 0; x < 8; ++x)
    if (q8.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
  CHECK(q8.element_order(2) == 4);  // i
}

TEST_CASE("enumerate M2(2,1) gives the dihedral group of order 8") {
  GroupRef g = ConcreteGroup::enumerate(d8_presentation());
  REQUIRE(g->order() == 8);
  CHECK(g->element_order(g->generator(0)) == 4);
  GroupRef hand = table_to_group(d8_table(), {1, 4});
  CHECK(is_isomorphic(g, hand));
}

TEST_CASE("enumerate Q8 matches the hand model") {
  GroupRef g = ConcreteGroup::enumerate(q8_presentation());
  REQUIRE(g->order() == 8);
  GroupRef hand = table_to_group(q8_table(), {2, 4});  // i and j
  CHECK(is_isomorphic(g, hand));
}

TEST_CASE("theorem groups enumerate to their stated orders") {
  CHECK(ConcreteGroup::enumerate(build_catalog("thm3.6.1", {{"p", "2"}}))->order() == 32);
  CHECK(ConcreteGroup::enumerate(build_catalog("thm3.7", {}))->order() == 64);
}

TEST_CASE("group laws and word machinery") {
  for (const auto& [id, params] : std::vector<std::pair<std::string, Params>>{
           {"thm3.6.1", {{"p", "2"}}}, {"thm3.6.16", {{"p", "3"}}}}) {
    GroupRef g = ConcreteGroup::enumerate(build_catalog(id, params));
    const int n = static_cast<int>(g->order());
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> el(0, n - 1);
    for (int x = 0; x < n; ++x) {
      CHECK(g->mul(0, x) == x);
      CHECK(g->mul(x, 0) == x);
      CHECK(g->mul(x, g->inv(x)) == 0);
      CHECK(g->pow(x, g->order()) == 0);
      CHECK(g->commutator(x, x) == 0);
      CHECK(g->eval_word(g->repr_word(x)) == x);
    }
    CHECK(g->repr_word(0).empty());
    for (int t = 0; t < 1000; ++t) {
      const int x = el(rng), y = el(rng), z = el(rng);
      CHECK(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
    }
    // relators act trivially from every start
    for (const FreeWord& rel : relators(g->source()))
      for (int x = 0; x < n; x += 7) CHECK(g->eval_word(rel, x) == x);
  }
}

TEST_CASE("free reduction preserves evaluation") {
  GroupRef g = ConcreteGroup::enumerate(build_catalog("thm3.6.1", {{"p", "2"}}));
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> gen(0, g->num_generators() - 1);
  std::uniform_int_distribution<int> exp(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Letter> letters;
    for (int i = 0; i < 10; ++i) {
      int e = exp(rng);
      if (e == 0) e = 2;
      letters.push_back({gen(rng), e});
    }
    // evaluate the raw letter sequence step by step
    int raw = 0;
    for (const Letter& l : letters) raw = g->eval_word(FreeWord::generator(l.gen, l.exp), raw);
    CHECK(raw == g->eval_word(free_reduce(letters)));
  }
}

TEST_CASE("enumeration is deterministic") {
  const Presentation pres = build_catalog("thm3.6.9", {{"p", "2"}});
  GroupRef a = ConcreteGroup::enumerate(pres);
  GroupRef b = ConcreteGroup::enumerate(pres);
  REQUIRE(a->order() == b->order());
  for (int gi = 0; gi < a->num_generators(); ++gi)
    for (int x = 0; x < a->order(); ++x) CHECK(a->apply_gen(x, gi) == b->apply_gen(x, gi));
}

TEST_CASE("unbounded presentations hit the coset limit") {
  const Presentation p = parse_presentation("group t\np 2\ngens a\nrel a = a\n");
  CHECK_THROWS_AS(ConcreteGroup::enumerate(p, 1000), CosetLimitExceeded);
}

TEST_CASE("non-p-groups are rejected") {
  // S3 = <a,b | a^3 = b^2 = 1, b^-1 a b = a^-1> declared with p = 2
  const Presentation p = parse_presentation(
      "group s3\np 2\ngens a b\nrel a^3 = 1\nrel b^2 = 1\nrel [a,b] = a\n");
  CHECK_THROWS_AS(ConcreteGroup::enumerate(p), NotAPGroup);
}

TEST_CASE("left and right multiplication tables agree with mul") {
  GroupRef g = ConcreteGroup::enumerate(build_catalog("thm3.6.3", {{"p", "2"}}));
  std::vector<int> left, right;
  for (int h = 0; h < g->order(); h += 5) {
    g->fill_left_mul(h, left);
    g->fill_right_mul(h, right);
    for (int x = 0; x < g->order(); ++x) {
      CHECK(left[static_cast<std::size_t>(x)] == g->mul(h, x));
      CHECK(right[static_cast<std::size_t>(x)] == g->mul(x, h));
    }
  }
}
