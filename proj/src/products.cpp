#include <algorithm>
#include <string>

#include "pgroup/errors.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

namespace {

bool central_in(const ConcreteGroup& g, int x) {
  for (int gi = 0; gi < g.num_generators(); ++gi) {
    const int e = g.generator(gi);
    if (g.mul(x, e) != g.mul(e, x)) return false;
  }
  return true;
}

// Reindexes a word of `from` into the combined generator numbering.
FreeWord shift_word(const FreeWord& w, const std::vector<int>& gen_map) {
  std::vector<Letter> letters;
  for (const Letter& l : w.letters())
    letters.push_back({gen_map[static_cast<std::size_t>(l.gen)], l.exp});
  return FreeWord::from_letters(letters);
}

}  // namespace

GroupRef central_product(const ConcreteGroup& a, const ConcreteGroup& b,
                         const std::vector<std::pair<int, int>>& identify,
                         std::int64_t max_cosets) {
  if (a.prime() != b.prime())
    throw BadIdentification("central product of groups over different primes");

  for (const auto& [x, y] : identify) {
    if (x < 0 || x >= a.order() || y < 0 || y >= b.order())
      throw BadIdentification("identified element index out of range");
    if (!central_in(a, x) || !central_in(b, y))
      throw BadIdentification("identified elements must be central in their factors");
  }

  // The map x_i -> y_i extends to an isomorphism of the generated central
  // subgroups iff the two exponent lattices coincide.
  std::int64_t tuple_count = 1;
  std::vector<std::int64_t> orders;
  for (const auto& [x, y] : identify) {
    (void)y;
    orders.push_back(a.element_order(x));
    tuple_count *= orders.back();
    if (tuple_count > 1'000'000)
      throw BadIdentification("identified subgroup too large to validate");
  }
  std::int64_t amalgam_order = 1;
  {
    std::int64_t kernel = 0;
    for (std::int64_t t = 0; t < tuple_count; ++t) {
      int xa = 0, yb = 0;
      std::int64_t rest = t;
      for (std::size_t i = 0; i < identify.size(); ++i) {
        const std::int64_t e = rest % orders[i];
        rest /= orders[i];
        xa = a.mul(xa, a.pow(identify[i].first, e));
        yb = b.mul(yb, b.pow(identify[i].second, e));
      }
      if ((xa == 0) != (yb == 0))
        throw BadIdentification("identification does not define an isomorphism");
      if (xa == 0) ++kernel;
    }
    amalgam_order = tuple_count / kernel;  // |<x_1..x_k>|
  }

  Presentation pres;
  pres.name = "prod";
  pres.prime = a.prime();
  const Presentation& pa = a.source();
  const Presentation& pb = b.source();

  std::vector<int> map_a, map_b;
  for (const std::string& n : pa.generators) {
    map_a.push_back(static_cast<int>(pres.generators.size()));
    pres.generators.push_back(n);
  }
  for (const std::string& n : pb.generators) {
    std::string name = n;
    int suffix = 2;
    while (pres.gen_index(name) >= 0) name = n + std::to_string(suffix++);
    map_b.push_back(static_cast<int>(pres.generators.size()));
    pres.generators.push_back(name);
  }

  for (const Relation& r : pa.relations)
    pres.relations.push_back({shift_word(r.lhs, map_a), shift_word(r.rhs, map_a)});
  for (const Relation& r : pb.relations)
    pres.relations.push_back({shift_word(r.lhs, map_b), shift_word(r.rhs, map_b)});
  for (std::size_t i = 0; i < pa.generators.size(); ++i)
    for (std::size_t j = 0; j < pb.generators.size(); ++j)
      pres.relations.push_back({FreeWord::commutator(FreeWord::generator(map_a[i]),
                                                     FreeWord::generator(map_b[j])),
                                FreeWord()});
  for (const auto& [x, y] : identify)
    pres.relations.push_back(
        {shift_word(a.repr_word(x), map_a), shift_word(b.repr_word(y), map_b)});

  GroupRef g = ConcreteGroup::enumerate(pres, max_cosets);
  if (g->order() * amalgam_order != a.order() * b.order())
    throw InternalInconsistency("central product order mismatch: got " +
                                std::to_string(g->order()) + ", expected " +
                                std::to_string(a.order() * b.order() / amalgam_order));
  return g;
}

GroupRef direct_product(const ConcreteGroup& a, const ConcreteGroup& b,
                        std::int64_t max_cosets) {
  return central_product(a, b, {}, max_cosets);
}

}  // namespace pgroup
