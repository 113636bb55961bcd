#include <random>

#include "doctest.h"
#include "pgroup/freeword.hpp"

using namespace pgroup;

TEST_CASE("free reduction cancels and merges") {
  // a * a^-1
  CHECK(free_reduce({{0, 1}, {0, -1}}).empty());
  // a^2 * a^3 = a^5
  FreeWord w = free_reduce({{0, 2}, {0, 3}});
  REQUIRE(w.size() == 1);
  CHECK(w.letters()[0].gen == 0);
  CHECK(w.letters()[0].exp == 5);
  // interior cancellation: a b b^-1 a = a^2
  FreeWord v = free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, 1}});
  REQUIRE(v.size() == 1);
  CHECK(v.letters()[0].exp == 2);
}

TEST_CASE("commutator expands to u^-1 v^-1 u v") {
  FreeWord a = FreeWord::generator(0);
  FreeWord b = FreeWord::generator(1);
  FreeWord c = FreeWord::commutator(a, b);
  CHECK(c == free_reduce({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
}

namespace {

FreeWord random_word(std::mt19937& rng, int ngens, int len) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> gen(0, ngens - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  for (int i = 0; i < len; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    letters.push_back({gen(rng), e});
  }
  return FreeWord::from_letters(letters);
}

}  // namespace

TEST_CASE("free_reduce is idempotent and inverses cancel") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    FreeWord w = random_word(rng, 3, 12);
    CHECK(FreeWord::from_letters(w.letters()) == w);
    CHECK((w * w.inverse()).empty());
    CHECK((w.inverse() * w).empty());
  }
}

TEST_CASE("powers") {
  FreeWord a = FreeWord::generator(0);
  CHECK(a.pow(4) == FreeWord::generator(0, 4));
  CHECK(a.pow(-2) == FreeWord::generator(0, -2));
  CHECK(a.pow(0).empty());
  FreeWord ab = FreeWord::generator(0) * FreeWord::generator(1);
  CHECK(ab.pow(2) == free_reduce({{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
}
