#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pgroup/freeword.hpp"
#include "pgroup/presentation.hpp"

namespace pgroup {

class ConcreteGroup;
using GroupRef = std::shared_ptr<const ConcreteGroup>;

// A finite p-group materialized as its regular representation: element
// indices 0..N-1 with one permutation table per generator (right
// multiplication).  Index 0 is the identity; the remaining indices follow
// breadth-first order from the identity, so construction is deterministic.
// Immutable after construction and safe for unrestricted concurrent reads.
class ConcreteGroup {
 public:
  // Todd-Coxeter enumeration over the trivial subgroup (HLT relator
  // scanning with union-find coincidence handling, deterministic
  // definition order).  Throws CosetLimitExceeded when the table would
  // exceed max_cosets rows and NotAPGroup when the resulting order is not
  // a power of pres.prime.
  static GroupRef enumerate(const Presentation& pres, std::int64_t max_cosets = 500000);

  // Builds a group directly from complete right-multiplication tables
  // (one bijection of 0..N-1 per generator).  Used for quotients.
  static GroupRef from_actions(std::int64_t prime,
                               std::vector<std::vector<int>> gen_action,
                               std::shared_ptr<const Presentation> source);

  std::int64_t order() const { return static_cast<std::int64_t>(n_); }
  std::int64_t prime() const { return prime_; }
  int num_generators() const { return static_cast<int>(gen_action_.size()); }
  const Presentation& source() const { return *source_; }
  std::shared_ptr<const Presentation> source_ptr() const { return source_; }

  // Element of the group that generator g evaluates to.
  int generator(int g) const { return gen_action_[static_cast<std::size_t>(g)][0]; }

  int apply_gen(int x, int g) const { return gen_action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  int apply_gen_inv(int x, int g) const { return gen_action_inv_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }

  // x * y, computed by applying y's spanning-tree word to x.
  int mul(int x, int y) const;
  int inv(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  int pow(int x, std::int64_t k) const;
  // [x, y] = x^-1 y^-1 x y
  int commutator(int x, int y) const;
  int conjugate(int x, int y) const;  // y^-1 x y
  std::int64_t element_order(int x) const;

  // Spanning-tree word for element x; evaluating it from the identity
  // yields x, and repr_word(0) is empty.
  FreeWord repr_word(int x) const;

  // BFS spanning-tree structure: parent element and edge column
  // (column = 2g for generator g, 2g+1 for its inverse).
  int tree_parent(int x) const { return tree_parent_[static_cast<std::size_t>(x)]; }
  int tree_col(int x) const { return tree_gen_[static_cast<std::size_t>(x)]; }
  int apply_col(int x, int c) const;

  int eval_word(const FreeWord& w, int from = 0) const;

  // Fills out[u] = h * u for every u; O(N).
  void fill_left_mul(int h, std::vector<int>& out) const;
  // Fills out[u] = u * h for every u; O(N * wordlen(h)).
  void fill_right_mul(int h, std::vector<int>& out) const;

 private:
  ConcreteGroup() = default;

  void finalize_tables();  // builds inverse tables, BFS tree, inverse elements
  void check_relators() const;

  std::size_t n_ = 0;
  std::int64_t prime_ = 2;
  std::vector<std::vector<int>> gen_action_;
  std::vector<std::vector<int>> gen_action_inv_;
  std::vector<std::vector<int>> left_gen_;      // left multiplication by generator
  std::vector<std::vector<int>> left_gen_inv_;  // left multiplication by its inverse
  std::vector<int> tree_parent_;
  std::vector<int> tree_gen_;
  std::vector<int> inverse_;
  std::shared_ptr<const Presentation> source_;
};

}  // namespace pgroup
