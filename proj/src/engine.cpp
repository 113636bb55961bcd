#include "pgroup/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "pgroup/errors.hpp"

namespace pgroup {

namespace {

// Column encoding: 2g for right multiplication by generator g, 2g+1 for
// its inverse; c ^ 1 flips direction.
std::vector<std::vector<int>> expand_relators(const Presentation& pres,
                                              std::int64_t max_letters) {
  std::vector<std::vector<int>> out;
  for (const FreeWord& rel : relators(pres)) {
    std::vector<int> cols;
    if (rel.length() > max_letters)
      throw Error("relator expansion exceeds " + std::to_string(max_letters) + " letters");
    cols.reserve(static_cast<std::size_t>(rel.length()));
    for (const Letter& l : rel.letters()) {
      const int col = l.exp > 0 ? 2 * l.gen : 2 * l.gen + 1;
      for (std::int64_t i = 0; i < std::llabs(l.exp); ++i) cols.push_back(col);
    }
    out.push_back(std::move(cols));
  }
  return out;
}

class CosetTable {
 public:
  CosetTable(int ngens, std::int64_t max_cosets)
      : ncols_(2 * ngens), max_cosets_(max_cosets) {
    new_coset();
  }

  int row_count() const { return static_cast<int>(uf_.size()); }
  std::int64_t alive_count() const { return alive_; }
  bool alive(int a) const { return uf_[static_cast<std::size_t>(a)] == a; }

  int entry(int a, int c) const { return tab_[static_cast<std::size_t>(a) * ncols_ + c]; }

  void scan_and_fill(int a, const std::vector<int>& word) {
    int f = a;
    int i = 0;
    int b = a;
    int j = static_cast<int>(word.size()) - 1;
    while (true) {
      while (i <= j && entry(f, word[static_cast<std::size_t>(i)]) >= 0)
        f = entry(f, word[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, word[static_cast<std::size_t>(j)] ^ 1) >= 0)
        b = entry(b, word[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set_entry(f, word[static_cast<std::size_t>(i)], b);
        set_entry(b, word[static_cast<std::size_t>(i)] ^ 1, f);
        return;
      }
      define(f, word[static_cast<std::size_t>(i)]);
    }
  }

  void fill_row(int a) {
    for (int c = 0; c < ncols_; ++c)
      if (entry(a, c) < 0) define(a, c);
  }

  // Live rows renumbered in index order; all entries must be defined.
  std::vector<std::vector<int>> compact(int ngens) const {
    std::vector<int> old2new(uf_.size(), -1);
    int next = 0;
    for (int a = 0; a < row_count(); ++a)
      if (alive(a)) old2new[static_cast<std::size_t>(a)] = next++;
    std::vector<std::vector<int>> actions(static_cast<std::size_t>(ngens),
                                          std::vector<int>(static_cast<std::size_t>(next)));
    for (int a = 0; a < row_count(); ++a) {
      if (!alive(a)) continue;
      for (int g = 0; g < ngens; ++g) {
        int d = entry(a, 2 * g);
        if (d < 0 || !alive(d))
          throw InternalInconsistency("coset table incomplete after enumeration");
        actions[static_cast<std::size_t>(g)][static_cast<std::size_t>(old2new[static_cast<std::size_t>(a)])] =
            old2new[static_cast<std::size_t>(d)];
      }
    }
    return actions;
  }

 private:
  int find(int a) {
    while (uf_[static_cast<std::size_t>(a)] != a) {
      uf_[static_cast<std::size_t>(a)] = uf_[static_cast<std::size_t>(uf_[static_cast<std::size_t>(a)])];
      a = uf_[static_cast<std::size_t>(a)];
    }
    return a;
  }

  void set_entry(int a, int c, int v) { tab_[static_cast<std::size_t>(a) * ncols_ + c] = v; }

  int new_coset() {
    if (row_count() >= max_cosets_)
      throw CosetLimitExceeded("coset table needs more than " + std::to_string(max_cosets_) +
                               " rows (" + std::to_string(alive_) +
                               " live); raise max_cosets or check that the presentation "
                               "defines a finite group");
    const int idx = row_count();
    uf_.push_back(idx);
    tab_.resize(tab_.size() + static_cast<std::size_t>(ncols_), -1);
    ++alive_;
    return idx;
  }

  void define(int a, int c) {
    const int n = new_coset();
    set_entry(a, c, n);
    set_entry(n, c ^ 1, a);
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf_[static_cast<std::size_t>(b)] = a;
    --alive_;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    std::size_t head = 0;
    while (head < queue_.size()) {
      const int y = queue_[head++];
      for (int c = 0; c < ncols_; ++c) {
        const int d = entry(y, c);
        if (d < 0) continue;
        if (entry(d, c ^ 1) == y) set_entry(d, c ^ 1, -1);
        const int mu = find(y);
        const int nu = find(d);
        if (entry(mu, c) >= 0) {
          merge(nu, entry(mu, c));
        } else if (entry(nu, c ^ 1) >= 0) {
          merge(mu, entry(nu, c ^ 1));
        } else {
          set_entry(mu, c, nu);
          set_entry(nu, c ^ 1, mu);
        }
      }
    }
  }

  int ncols_;
  std::int64_t max_cosets_;
  std::vector<int> tab_;
  std::vector<int> uf_;
  std::int64_t alive_ = 0;
  std::vector<int> queue_;
};

bool power_of(std::int64_t n, std::int64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

GroupRef ConcreteGroup::enumerate(const Presentation& pres, std::int64_t max_cosets) {
  pres.validate();
  const int ngens = static_cast<int>(pres.generators.size());
  const auto rels = expand_relators(pres, 2'000'000);

  CosetTable table(ngens, max_cosets);
  for (int a = 0; a < table.row_count(); ++a) {
    if (!table.alive(a)) continue;
    for (const auto& rel : rels) {
      table.scan_and_fill(a, rel);
      if (!table.alive(a)) break;
    }
    if (table.alive(a)) table.fill_row(a);
  }

  return from_actions(pres.prime, table.compact(ngens),
                      std::make_shared<const Presentation>(pres));
}

GroupRef ConcreteGroup::from_actions(std::int64_t prime,
                                     std::vector<std::vector<int>> gen_action,
                                     std::shared_ptr<const Presentation> source) {
  auto g = std::shared_ptr<ConcreteGroup>(new ConcreteGroup());
  g->prime_ = prime;
  g->gen_action_ = std::move(gen_action);
  g->source_ = std::move(source);
  if (g->gen_action_.empty()) throw Error("group needs at least one generator action");
  g->n_ = g->gen_action_[0].size();
  if (g->source_ && g->source_->generators.size() != g->gen_action_.size())
    throw InternalInconsistency("generator action count does not match presentation");
  if (!power_of(static_cast<std::int64_t>(g->n_), prime))
    throw NotAPGroup("group order " + std::to_string(g->n_) + " is not a power of " +
                     std::to_string(prime));
  g->finalize_tables();
  g->check_relators();
  return g;
}

void ConcreteGroup::finalize_tables() {
  const std::size_t n = n_;
  const std::size_t k = gen_action_.size();

  gen_action_inv_.assign(k, std::vector<int>(n, -1));
  for (std::size_t gi = 0; gi < k; ++gi) {
    if (gen_action_[gi].size() != n)
      throw InternalInconsistency("generator tables have mismatched sizes");
    auto& inv = gen_action_inv_[gi];
    for (std::size_t x = 0; x < n; ++x) {
      const int y = gen_action_[gi][x];
      if (y < 0 || static_cast<std::size_t>(y) >= n || inv[static_cast<std::size_t>(y)] != -1)
        throw InternalInconsistency("generator action is not a bijection");
      inv[static_cast<std::size_t>(y)] = static_cast<int>(x);
    }
  }

  // BFS from the identity; discovery order must match index order, which
  // enumerate()/quotient construction guarantee via renumbering below.
  tree_parent_.assign(n, -1);
  tree_gen_.assign(n, -1);
  std::vector<int> order(n, -1);
  std::vector<int> bfs;
  bfs.reserve(n);
  bfs.push_back(0);
  order[0] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int x = bfs[head];
    for (std::size_t gi = 0; gi < k; ++gi) {
      for (int dir = 0; dir < 2; ++dir) {
        const int y = dir == 0 ? gen_action_[gi][static_cast<std::size_t>(x)]
                               : gen_action_inv_[gi][static_cast<std::size_t>(x)];
        if (order[static_cast<std::size_t>(y)] >= 0) continue;
        order[static_cast<std::size_t>(y)] = static_cast<int>(bfs.size());
        bfs.push_back(y);
        tree_parent_[static_cast<std::size_t>(y)] = x;
        tree_gen_[static_cast<std::size_t>(y)] = 2 * static_cast<int>(gi) + dir;
      }
    }
  }
  if (bfs.size() != n)
    throw InternalInconsistency("generator actions are not transitive from the identity");

  // Renumber elements into BFS order so indices are canonical.
  bool already_sorted = true;
  for (std::size_t x = 0; x < n; ++x)
    if (order[x] != static_cast<int>(x)) already_sorted = false;
  if (!already_sorted) {
    std::vector<std::vector<int>> new_act(k, std::vector<int>(n));
    for (std::size_t gi = 0; gi < k; ++gi)
      for (std::size_t x = 0; x < n; ++x)
        new_act[gi][static_cast<std::size_t>(order[x])] =
            order[static_cast<std::size_t>(gen_action_[gi][x])];
    gen_action_ = std::move(new_act);
    std::vector<int> new_parent(n, -1), new_gen(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      if (tree_parent_[x] < 0) continue;
      new_parent[static_cast<std::size_t>(order[x])] = order[static_cast<std::size_t>(tree_parent_[x])];
      new_gen[static_cast<std::size_t>(order[x])] = tree_gen_[x];
    }
    tree_parent_ = std::move(new_parent);
    tree_gen_ = std::move(new_gen);
    gen_action_inv_.assign(k, std::vector<int>(n));
    for (std::size_t gi = 0; gi < k; ++gi)
      for (std::size_t x = 0; x < n; ++x)
        gen_action_inv_[gi][static_cast<std::size_t>(gen_action_[gi][x])] = static_cast<int>(x);
  }

  // Left multiplication by each generator and its inverse, walked down the
  // spanning tree (children have larger indices than parents).
  left_gen_.assign(k, std::vector<int>(n));
  left_gen_inv_.assign(k, std::vector<int>(n));
  for (std::size_t gi = 0; gi < k; ++gi) {
    left_gen_[gi][0] = gen_action_[gi][0];
    left_gen_inv_[gi][0] = gen_action_inv_[gi][0];
    for (std::size_t x = 1; x < n; ++x) {
      const int par = tree_parent_[x];
      const int c = tree_gen_[x];
      left_gen_[gi][x] = apply_col(left_gen_[gi][static_cast<std::size_t>(par)], c);
      left_gen_inv_[gi][x] = apply_col(left_gen_inv_[gi][static_cast<std::size_t>(par)], c);
    }
  }

  inverse_.assign(n, 0);
  for (std::size_t x = 1; x < n; ++x) {
    const int par = tree_parent_[x];
    const int c = tree_gen_[x];
    const int inv_par = inverse_[static_cast<std::size_t>(par)];
    // (par * g)^-1 = g^-1 * par^-1
    inverse_[x] = (c & 1) ? left_gen_[static_cast<std::size_t>(c >> 1)][static_cast<std::size_t>(inv_par)]
                          : left_gen_inv_[static_cast<std::size_t>(c >> 1)][static_cast<std::size_t>(inv_par)];
  }
}

int ConcreteGroup::apply_col(int x, int c) const {
  return (c & 1) ? gen_action_inv_[static_cast<std::size_t>(c >> 1)][static_cast<std::size_t>(x)]
                 : gen_action_[static_cast<std::size_t>(c >> 1)][static_cast<std::size_t>(x)];
}

int ConcreteGroup::mul(int x, int y) const {
  thread_local std::vector<int> cols;
  cols.clear();
  while (y != 0) {
    cols.push_back(tree_gen_[static_cast<std::size_t>(y)]);
    y = tree_parent_[static_cast<std::size_t>(y)];
  }
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) x = apply_col(x, *it);
  return x;
}

int ConcreteGroup::pow(int x, std::int64_t k) const {
  if (k < 0) return inv(pow(x, -k));
  int result = 0;
  int base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int ConcreteGroup::commutator(int x, int y) const {
  return mul(mul(mul(inv(x), inv(y)), x), y);
}

int ConcreteGroup::conjugate(int x, int y) const { return mul(mul(inv(y), x), y); }

std::int64_t ConcreteGroup::element_order(int x) const {
  std::int64_t ord = 1;
  while (x != 0) {
    x = pow(x, prime_);
    ord *= prime_;
  }
  return ord;
}

FreeWord ConcreteGroup::repr_word(int x) const {
  std::vector<Letter> letters;
  while (x != 0) {
    const int c = tree_gen_[static_cast<std::size_t>(x)];
    letters.push_back({c >> 1, (c & 1) ? std::int64_t{-1} : std::int64_t{1}});
    x = tree_parent_[static_cast<std::size_t>(x)];
  }
  std::reverse(letters.begin(), letters.end());
  return FreeWord::from_letters(letters);
}

int ConcreteGroup::eval_word(const FreeWord& w, int from) const {
  int x = from;
  for (const Letter& l : w.letters()) {
    const std::int64_t ord = element_order(generator(l.gen));
    std::int64_t e = l.exp % ord;
    if (e < 0) e += ord;
    for (std::int64_t i = 0; i < e; ++i) x = apply_gen(x, l.gen);
  }
  return x;
}

void ConcreteGroup::fill_left_mul(int h, std::vector<int>& out) const {
  out.resize(n_);
  out[0] = h;
  for (std::size_t x = 1; x < n_; ++x)
    out[x] = apply_col(out[static_cast<std::size_t>(tree_parent_[x])], tree_gen_[x]);
}

void ConcreteGroup::fill_right_mul(int h, std::vector<int>& out) const {
  out.resize(n_);
  std::iota(out.begin(), out.end(), 0);
  std::vector<int> cols;
  while (h != 0) {
    cols.push_back(tree_gen_[static_cast<std::size_t>(h)]);
    h = tree_parent_[static_cast<std::size_t>(h)];
  }
  for (auto it = cols.rbegin(); it != cols.rend(); ++it)
    for (std::size_t x = 0; x < n_; ++x) out[x] = apply_col(out[x], *it);
}

void ConcreteGroup::check_relators() const {
  if (!source_) return;
  const std::size_t n = n_;
  std::vector<int> cur(n), power(n), square(n), tmp(n);
  for (const FreeWord& rel : relators(*source_)) {
    std::iota(cur.begin(), cur.end(), 0);
    for (const Letter& l : rel.letters()) {
      const auto& table =
          l.exp > 0 ? gen_action_[static_cast<std::size_t>(l.gen)] : gen_action_inv_[static_cast<std::size_t>(l.gen)];
      const std::int64_t ord = element_order(generator(l.gen));
      std::int64_t e = std::llabs(l.exp) % ord;
      // power = table^e by binary exponentiation over permutations
      std::iota(power.begin(), power.end(), 0);
      square = table;
      while (e > 0) {
        if (e & 1)
          for (std::size_t x = 0; x < n; ++x) power[x] = square[static_cast<std::size_t>(power[x])];
        e >>= 1;
        if (e > 0) {
          for (std::size_t x = 0; x < n; ++x) tmp[x] = square[static_cast<std::size_t>(square[x])];
          square.swap(tmp);
        }
      }
      for (std::size_t x = 0; x < n; ++x) cur[x] = power[static_cast<std::size_t>(cur[x])];
    }
    for (std::size_t x = 0; x < n; ++x)
      if (cur[x] != static_cast<int>(x))
        throw InternalInconsistency("relator does not act trivially on the enumerated group");
  }
}

}  // namespace pgroup
