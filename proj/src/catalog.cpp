#include "pgroup/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "pgroup/errors.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

namespace {

std::string S(std::int64_t v) { return std::to_string(v); }

std::int64_t ipow(std::int64_t p, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > (std::int64_t{1} << 62) / p) throw InvalidParameters("p^n exceeds the 2^63 cap");
    r *= p;
  }
  return r;
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a = ((a % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

class PresBuilder {
 public:
  PresBuilder(const std::string& name, std::int64_t p, const std::string& gens) {
    os_ << "group " << name << "\np " << p << "\ngens " << gens << "\n";
  }
  PresBuilder& rel(const std::string& line) {
    os_ << "rel " << line << "\n";
    return *this;
  }
  Presentation done() const { return parse_presentation(os_.str()); }

 private:
  std::ostringstream os_;
};

}  // namespace

std::int64_t param_int(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidParameters("missing parameter '" + key + "'");
  try {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw InvalidParameters("parameter '" + key + "' is not an integer: " + it->second);
  }
}

std::string param_str(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidParameters("missing parameter '" + key + "'");
  return it->second;
}

std::string params_to_string(const Params& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ",";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

bool is_nonresidue(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  if (a == 0) return false;
  return powmod(a, (p - 1) / 2, p) != 1;
}

std::int64_t nonresidue(std::int64_t p) {
  for (std::int64_t a = 2; a < p; ++a)
    if (is_nonresidue(a, p)) return a;
  throw InvalidParameters("no quadratic non-residue mod " + S(p));
}

Presentation d8_presentation() {
  return PresBuilder("d8", 2, "a b").rel("a^4 = 1").rel("b^2 = 1").rel("[a,b] = a^2").done();
}

Presentation q8_presentation() {
  return PresBuilder("q8", 2, "a b").rel("a^4 = 1").rel("b^2 = a^2").rel("[a,b] = a^2").done();
}

Presentation mp_nm_presentation(std::int64_t p, int n, int m) {
  if (n < 2 || m < 1) throw InvalidParameters("M_p(n,m) requires n >= 2, m >= 1");
  return PresBuilder("m" + S(p) + "_" + S(n) + "_" + S(m), p, "a b")
      .rel("a^" + S(ipow(p, n)) + " = 1")
      .rel("b^" + S(ipow(p, m)) + " = 1")
      .rel("[a,b] = a^" + S(ipow(p, n - 1)))
      .done();
}

Presentation mp_nm1_presentation(std::int64_t p, int n, int m) {
  if (n < m || m < 1) throw InvalidParameters("M_p(n,m,1) requires n >= m >= 1");
  if (p == 2 && n + m < 3) throw InvalidParameters("M_2(n,m,1) requires n + m >= 3");
  return PresBuilder("m" + S(p) + "_" + S(n) + "_" + S(m) + "_1", p, "a b c")
      .rel("a^" + S(ipow(p, n)) + " = 1")
      .rel("b^" + S(ipow(p, m)) + " = 1")
      .rel("c^" + S(p) + " = 1")
      .rel("[a,b] = c")
      .rel("[c,a] = 1")
      .rel("[c,b] = 1")
      .done();
}

Presentation cyclic_presentation(std::int64_t p, int k) {
  return PresBuilder("c" + S(ipow(p, k)), p, "a").rel("a^" + S(ipow(p, k)) + " = 1").done();
}

Presentation abelian_presentation(std::int64_t p, const std::vector<std::int64_t>& orders) {
  std::string gens;
  for (std::size_t i = 0; i < orders.size(); ++i) gens += (i ? " g" : "g") + S(static_cast<std::int64_t>(i));
  PresBuilder b("ab", p, gens);
  for (std::size_t i = 0; i < orders.size(); ++i)
    b.rel("g" + S(static_cast<std::int64_t>(i)) + "^" + S(orders[i]) + " = 1");
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      b.rel("[g" + S(static_cast<std::int64_t>(i)) + ",g" + S(static_cast<std::int64_t>(j)) + "] = 1");
  return b.done();
}

// ---------------------------------------------------------------------------
// Named-group labels

namespace {

// Structure of the order-32 group named by the "M2(2,2,1).C2" label
// (an index-2 overgroup of C4 x C4; see build notes in the test suite).
Presentation pinned_m2221_dot_c2() {
  return PresBuilder("m2221dotc2", 2, "u v w")
      .rel("u^4 = 1")
      .rel("w^4 = 1")
      .rel("v^2 = u^2")
      .rel("[u,w] = 1")
      .rel("[w,v] = w^2")
      .rel("[u,v] = w^2 u^2")
      .done();
}

std::int64_t prime_of_power(std::int64_t q) {
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return d;
  return q;
}

int log_base(std::int64_t q, std::int64_t p) {
  int e = 0;
  while (q > 1) {
    if (q % p != 0) throw Error("not a power of the prime");
    q /= p;
    ++e;
  }
  return e;
}

Presentation parse_factor(const std::string& f) {
  if (f == "D8") return d8_presentation();
  if (f == "Q8") return q8_presentation();
  if (f.size() >= 2 && f[0] == 'C') {
    const std::int64_t q = std::stoll(f.substr(1));
    const std::int64_t p = prime_of_power(q);
    return cyclic_presentation(p, log_base(q, p));
  }
  long long p = 0;
  int n = 0, m = 0, one = 0;
  if (std::sscanf(f.c_str(), "M%lld(%d,%d,%d)", &p, &n, &m, &one) == 4) {
    if (one == 1 && ("M" + S(p) + "(" + S(n) + "," + S(m) + ",1)") == f)
      return mp_nm1_presentation(p, n, m);
  } else if (std::sscanf(f.c_str(), "M%lld(%d,%d)", &p, &n, &m) == 3) {
    if (("M" + S(p) + "(" + S(n) + "," + S(m) + ")") == f) return mp_nm_presentation(p, n, m);
  }
  throw InvalidParameters("unrecognized group label factor '" + f + "'");
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(sep, pos);
    if (hit == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, hit - pos));
    pos = hit + sep.size();
  }
}

// Smallest non-identity element, used as the canonical generator of an
// order-p subgroup.
int small_nonidentity(const Subgroup& s) {
  int found = -1;
  s.members.for_each([&](int x) {
    if (x != 0 && found < 0) found = x;
  });
  return found;
}

}  // namespace

std::string abelian_label(const std::vector<std::int64_t>& invariants) {
  if (invariants.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < invariants.size(); ++i)
    out += (i ? " x C" : "C") + S(invariants[i]);
  return out;
}

GroupRef build_label(const std::string& label, std::int64_t max_cosets) {
  if (label == "M2(2,2,1).C2") return ConcreteGroup::enumerate(pinned_m2221_dot_c2(), max_cosets);

  const std::vector<std::string> central = split_on(label, " * ");
  if (central.size() == 2) {
    GroupRef base = ConcreteGroup::enumerate(parse_factor(central[0]), max_cosets);
    if (central[1].empty() || central[1][0] != 'C')
      throw InvalidParameters("central label needs a cyclic right factor: " + label);
    GroupRef cyc = ConcreteGroup::enumerate(parse_factor(central[1]), max_cosets);
    const std::int64_t p = base->prime();
    Subgroup der = derived_subgroup(full_subgroup(base));
    if (der.order() != p)
      throw InvalidParameters("central label requires |X'| = p: " + label);
    const int dgen = small_nonidentity(der);
    const int zgen = cyc->pow(cyc->generator(0), cyc->order() / p);
    return central_product(*base, *cyc, {{dgen, zgen}}, max_cosets);
  }
  if (central.size() > 2) throw InvalidParameters("bad central label: " + label);

  const std::vector<std::string> factors = split_on(label, " x ");
  GroupRef g = ConcreteGroup::enumerate(parse_factor(factors[0]), max_cosets);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    GroupRef h = ConcreteGroup::enumerate(parse_factor(factors[i]), max_cosets);
    g = direct_product(*g, *h, max_cosets);
  }
  return g;
}

namespace {

std::string mp_label(std::int64_t p, int n, int m) {
  return "M" + S(p) + "(" + S(n) + "," + S(m) + ")";
}
std::string mp1_label(std::int64_t p, int n, int m) {
  return "M" + S(p) + "(" + S(n) + "," + S(m) + ",1)";
}

// Minimal non-abelian families of order p^j, fixed order, aliases of D8
// excluded for p = 2.
std::vector<std::string> a1_bases(std::int64_t p, int j) {
  std::vector<std::string> out;
  if (p == 2 && j == 3) {
    out.push_back("D8");
    out.push_back("Q8");
  }
  for (int n = 2; n <= j - 1; ++n) {
    const int m = j - n;
    if (m < 1) continue;
    if (p == 2 && n == 2 && m == 1) continue;  // M2(2,1) is D8
    out.push_back(mp_label(p, n, m));
  }
  for (int n = 1; n <= j - 2; ++n) {
    const int m = j - 1 - n;
    if (m < 1 || m > n) continue;
    if (p == 2 && n + m < 3) continue;
    out.push_back(mp1_label(p, n, m));
  }
  return out;
}

void descending_partitions(int k, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    descending_partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

std::string abelian_type_label(std::int64_t p, const std::vector<int>& parts) {
  std::vector<std::int64_t> invs;
  for (int e : parts) invs.push_back(ipow(p, e));
  return abelian_label(invs);
}

}  // namespace

std::vector<std::string> label_candidates(std::int64_t p, std::int64_t order) {
  int m = 0;
  {
    std::int64_t q = order;
    while (q > 1) {
      if (q % p != 0) return {};
      q /= p;
      ++m;
    }
  }
  std::vector<std::string> out;
  for (const std::string& base : a1_bases(p, m)) out.push_back(base);
  for (int j = m - 1; j >= 3; --j) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    descending_partitions(m - j, m - j, cur, parts);
    for (const std::string& base : a1_bases(p, j))
      for (const auto& part : parts) out.push_back(base + " x " + abelian_type_label(p, part));
  }
  for (int j = m - 1; j >= 3; --j) {
    const int k = m - j + 1;
    if (k < 2) continue;
    for (const std::string& base : a1_bases(p, j))
      out.push_back(base + " * C" + S(ipow(p, k)));
  }
  if (p == 2 && m == 5) out.push_back("M2(2,2,1).C2");
  return out;
}

// ---------------------------------------------------------------------------
// Theorem 3.6 entries

namespace {

struct Thm36Spec {
  int num = 0;
  char pdom = '2';     // '2': p=2; '3': p=3; 'g': p>=3; 'G': p>3
  int nmin = -1;       // -1: no n parameter
  int order_add = 0;   // |G| = p^(n + order_add), n = 0 when absent
  int level_coef = 0;  // level = level_coef*n + level_add
  int level_add = 0;
  int nu_mode = 0;  // 0: none, 1: nu, 2: nu1,nu2, 3: r with -r qnr, 4: nu with -nu qnr
  std::function<Presentation(std::int64_t p, int n, std::int64_t v1, std::int64_t v2)> pres;
  std::function<std::vector<std::string>(std::int64_t p, int n)> kgens;
  std::function<std::string(std::int64_t p, int n)> klabel;
};

bool prime_in_domain(std::int64_t p, char dom) {
  switch (dom) {
    case '2': return p == 2;
    case '3': return p == 3;
    case 'g': return p >= 3;
    case 'G': return p > 3;
  }
  return false;
}

std::string prime_domain_text(char dom) {
  switch (dom) {
    case '2': return "p = 2";
    case '3': return "p = 3";
    case 'g': return "p >= 3";
    case 'G': return "p > 3";
  }
  return "?";
}

const std::vector<Thm36Spec>& thm36_table() {
  static const std::vector<Thm36Spec> table = [] {
    std::vector<Thm36Spec> t;
    auto P = [](std::int64_t p, int num) {
      return PresBuilder("thm3_6_" + S(num), p, "a b c");
    };

    // (1)
    t.push_back({1, '2', -1, 5, 0, 3, 0,
                 [P](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return P(p, 1)
                       .rel("a^4 = 1").rel("b^4 = 1").rel("c^2 = 1")
                       .rel("[b,c] = 1").rel("[c,a] = b^2").rel("[a,b] = a^2")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"a b", "c", "a^2"}; },
                 [](std::int64_t, int) { return std::string("D8 x C2"); }});
    // (2): chained [a,c] = a^2 = c^2 read as two relations
    t.push_back({2, '2', -1, 5, 0, 3, 0,
                 [](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return PresBuilder("thm3_6_2", p, "a b c x")
                       .rel("a^4 = 1").rel("b^2 = 1").rel("x^2 = 1")
                       .rel("[a,b] = x").rel("[a,c] = a^2").rel("a^2 = c^2")
                       .rel("[b,c] = 1").rel("[x,a] = 1").rel("[x,b] = 1").rel("[x,c] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"a", "c", "x"}; },
                 [](std::int64_t, int) { return std::string("Q8 x C2"); }});
    // (3)
    t.push_back({3, '2', -1, 5, 0, 3, 0,
                 [P](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return P(p, 3)
                       .rel("a^8 = 1").rel("c^2 = 1").rel("b^2 = a^4")
                       .rel("[a,b] = c").rel("[c,a] = b^2").rel("[c,b] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"a^2", "b", "c"}; },
                 [](std::int64_t, int) { return std::string("Q8 x C2"); }});
    // (4)
    t.push_back({4, '2', -1, 6, 0, 3, 0,
                 [P](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return P(p, 4)
                       .rel("a^8 = 1").rel("c^4 = 1").rel("b^2 = a^4")
                       .rel("[a,b] = c").rel("[c,a] = a^4").rel("[c,b] = c^2")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"a^2", "b", "c"}; },
                 [](std::int64_t, int) { return std::string("M2(2,2,1).C2"); }});
    // (5)
    t.push_back({5, '2', 2, 3, 0, 3, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 5)
                       .rel("a^" + S(ipow(2, n + 1)) + " = 1").rel("b^2 = 1").rel("c^2 = 1")
                       .rel("[a,b] = c").rel("[c,a] = a^" + S(ipow(2, n))).rel("[c,b] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"a^2", "b", "c"}; },
                 [](std::int64_t, int n) { return mp_label(2, n, 1) + " x C2"; }});
    // (6)
    t.push_back({6, '2', 2, 3, 0, 3, 0,
                 [](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return PresBuilder("thm3_6_6", p, "a b c d")
                       .rel("a^" + S(ipow(2, n)) + " = 1").rel("b^2 = 1").rel("c^2 = 1")
                       .rel("d^2 = 1").rel("[a,b] = c").rel("[c,a] = d")
                       .rel("[c,b] = 1").rel("[d,a] = 1").rel("[d,b] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"a^2", "b", "c"}; },
                 [](std::int64_t, int n) { return mp1_label(2, n - 1, 1) + " x C2"; }});
    // (7)
    t.push_back({7, '2', 3, 3, 0, 3, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 7)
                       .rel("a^" + S(ipow(2, n)) + " = 1").rel("b^4 = 1").rel("c^2 = 1")
                       .rel("[a,b] = c").rel("[c,a] = b^2").rel("[c,b] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"b", "a^2", "c"}; },
                 [](std::int64_t, int n) { return mp_label(2, 2, n - 1) + " x C2"; }});
    // (8)
    t.push_back({8, '2', -1, 7, 0, 3, 0,
                 [P](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return P(p, 8)
                       .rel("a^8 = 1").rel("b^4 = 1").rel("c^4 = 1")
                       .rel("[b,c] = a^4").rel("[c,a] = b^2").rel("[a,b] = b^2 c^2")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"b", "c", "a^2"}; },
                 [](std::int64_t, int) { return std::string("M2(2,2,1) * C4"); }});
    // (9)
    t.push_back({9, '2', -1, 6, 0, 4, 0,
                 [P](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return P(p, 9)
                       .rel("a^4 = 1").rel("b^4 = 1").rel("c^4 = 1")
                       .rel("[a,b] = c").rel("[c,a] = b^2").rel("[c,b] = c^2")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"c", "a^2 b", "b^2"}; },
                 [](std::int64_t, int) { return std::string("Q8 x C2"); }});
    // (10)
    t.push_back({10, '2', 2, 3, 1, 1, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 10)
                       .rel("b^2 = 1").rel("c^4 = 1").rel("a^" + S(ipow(2, n)) + " = c^2")
                       .rel("[a,b] = c").rel("[c,a] = c^2").rel("[c,b] = c^2")
                       .done();
                 },
                 [](std::int64_t, int n) {
                   return std::vector<std::string>{"c", "b", "a^" + S(ipow(2, n - 1))};
                 },
                 [](std::int64_t, int) { return std::string("D8 * C4"); }});
    // (11)
    t.push_back({11, '2', 2, 3, 1, 1, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 11)
                       .rel("a^" + S(ipow(2, n)) + " = 1").rel("b^2 = 1").rel("c^4 = 1")
                       .rel("[a,b] = c").rel("[c,a] = c^2").rel("[c,b] = c^2")
                       .done();
                 },
                 [](std::int64_t, int n) {
                   return std::vector<std::string>{"c", "b", "a^" + S(ipow(2, n - 1))};
                 },
                 [](std::int64_t, int) { return std::string("D8 x C2"); }});
    // (12)
    t.push_back({12, '2', 2, 3, 1, 1, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 12)
                       .rel("a^" + S(ipow(2, n)) + " = 1").rel("c^4 = 1").rel("b^2 = c^2")
                       .rel("[a,b] = c").rel("[c,a] = c^2").rel("[c,b] = c^2")
                       .done();
                 },
                 [](std::int64_t, int n) {
                   return std::vector<std::string>{"c", "b", "a^" + S(ipow(2, n - 1))};
                 },
                 [](std::int64_t, int) { return std::string("Q8 x C2"); }});
    // (13): chained [c,a] = a^2 = c^2
    t.push_back({13, '2', 2, 4, 1, 2, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 13)
                       .rel("a^4 = 1").rel("b^" + S(ipow(2, n + 1)) + " = 1").rel("c^4 = 1")
                       .rel("[b,c] = 1").rel("[c,a] = a^2").rel("a^2 = c^2")
                       .rel("[a,b] = b^" + S(ipow(2, n)))
                       .done();
                 },
                 [](std::int64_t, int n) {
                   return std::vector<std::string>{"a", "c", "b^" + S(ipow(2, n))};
                 },
                 [](std::int64_t, int) { return std::string("Q8 x C2"); }});
    // (14)
    t.push_back({14, '2', 3, 4, 1, 2, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 14)
                       .rel("a^" + S(ipow(2, n + 1)) + " = 1").rel("b^4 = 1").rel("c^2 = b^2")
                       .rel("[a,b] = c").rel("[c,a] = a^" + S(ipow(2, n))).rel("[c,b] = c^2")
                       .done();
                 },
                 [](std::int64_t, int n) {
                   return std::vector<std::string>{"c", "b", "a^" + S(ipow(2, n))};
                 },
                 [](std::int64_t, int) { return std::string("Q8 x C2"); }});
    // (15)
    t.push_back({15, '3', -1, 5, 0, 3, 0,
                 [](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return PresBuilder("thm3_6_15", p, "a b c d")
                       .rel("a^9 = 1").rel("c^3 = 1").rel("d^3 = 1").rel("b^3 = a^3")
                       .rel("[a,b] = c").rel("[c,a] = d").rel("[c,b] = a^3")
                       .rel("[d,a] = 1").rel("[d,b] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"b", "c", "d"}; },
                 [](std::int64_t, int) { return mp_label(3, 2, 1) + " x C3"; }});
    // (16)
    t.push_back({16, '3', -1, 5, 0, 3, 0,
                 [](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return PresBuilder("thm3_6_16", p, "a b c d")
                       .rel("a^9 = 1").rel("b^3 = 1").rel("c^3 = 1").rel("d^3 = 1")
                       .rel("[a,b] = c").rel("[c,a] = d").rel("[c,b] = a^-3")
                       .rel("[d,a] = 1").rel("[d,b] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"c", "b", "d"}; },
                 [](std::int64_t, int) { return mp1_label(3, 1, 1) + " x C3"; }});
    // (17)
    t.push_back({17, 'G', -1, 5, 0, 3, 1,
                 [](std::int64_t p, int, std::int64_t nu, std::int64_t) {
                   return PresBuilder("thm3_6_17", p, "a b c d")
                       .rel("a^" + S(p) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p) + " = 1").rel("d^" + S(p) + " = 1")
                       .rel("[a,b] = c").rel("[c,a] = b^" + S(nu * p)).rel("[c,b] = d")
                       .rel("[d,a] = 1").rel("[d,b] = 1")
                       .done();
                 },
                 [](std::int64_t, int) { return std::vector<std::string>{"a", "c", "d"}; },
                 [](std::int64_t p, int) { return mp1_label(p, 1, 1) + " x C" + S(p); }});
    // (18)
    t.push_back({18, 'g', -1, 5, 0, 3, 0,
                 [P](std::int64_t p, int, std::int64_t, std::int64_t) {
                   return P(p, 18)
                       .rel("a^" + S(p) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p * p) + " = 1")
                       .rel("[b,c] = 1").rel("[c,a] = b^" + S(p) + " c^" + S(p))
                       .rel("[a,b] = b^-" + S(p))
                       .done();
                 },
                 [](std::int64_t p, int) {
                   return std::vector<std::string>{"b", "a", "c^" + S(p)};
                 },
                 [](std::int64_t p, int) { return mp_label(p, 2, 1) + " x C" + S(p); }});
    // (19)
    t.push_back({19, 'G', -1, 5, 0, 3, 1,
                 [P](std::int64_t p, int, std::int64_t nu, std::int64_t) {
                   return P(p, 19)
                       .rel("a^" + S(p * p) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p) + " = 1")
                       .rel("[a,b] = c").rel("[c,a] = a^" + S(p) + " b^" + S(nu * p))
                       .rel("[c,b] = b^" + S(p))
                       .done();
                 },
                 [](std::int64_t p, int) {
                   return std::vector<std::string>{"b", "c", "a^" + S(p)};
                 },
                 [](std::int64_t p, int) { return mp_label(p, 2, 1) + " x C" + S(p); }});
    // (20)
    t.push_back({20, 'g', -1, 6, 0, 3, 1,
                 [P](std::int64_t p, int, std::int64_t nu, std::int64_t) {
                   return P(p, 20)
                       .rel("a^" + S(p) + " = 1").rel("b^" + S(p * p * p) + " = 1")
                       .rel("c^" + S(p * p) + " = 1")
                       .rel("[b,c] = 1").rel("[c,a] = b^" + S(p * p))
                       .rel("[a,b] = c^" + S(nu * p))
                       .done();
                 },
                 [](std::int64_t p, int) {
                   return std::vector<std::string>{"c", "a", "b^" + S(p)};
                 },
                 [](std::int64_t p, int) { return mp1_label(p, 2, 1) + " * C" + S(p * p); }});
    // (21)
    t.push_back({21, 'g', -1, 6, 0, 3, 2,
                 [P](std::int64_t p, int, std::int64_t nu1, std::int64_t nu2) {
                   return P(p, 21)
                       .rel("a^" + S(p * p * p) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p) + " = 1")
                       .rel("[a,b] = c").rel("[c,a] = b^" + S(nu1 * p))
                       .rel("[c,b] = a^-" + S(nu2 * p * p))
                       .done();
                 },
                 [](std::int64_t p, int) {
                   return std::vector<std::string>{"c", "b", "a^" + S(p)};
                 },
                 [](std::int64_t p, int) { return mp1_label(p, 2, 1) + " * C" + S(p * p); }});
    // (22)
    t.push_back({22, 'g', -1, 6, 0, 3, 4,
                 [P](std::int64_t p, int, std::int64_t nu, std::int64_t) {
                   return P(p, 22)
                       .rel("a^" + S(p * p) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p * p) + " = 1")
                       .rel("[b,c] = a^" + S(p)).rel("[c,a] = c^-" + S(p))
                       .rel("[a,b] = b^" + S(p) + " c^" + S(nu * p))
                       .done();
                 },
                 [](std::int64_t p, int) {
                   return std::vector<std::string>{"c", "a", "b^" + S(p)};
                 },
                 [](std::int64_t p, int) { return mp_label(p, 2, 2) + " x C" + S(p); }});
    // (23)
    t.push_back({23, 'g', -1, 7, 0, 3, 4,
                 [P](std::int64_t p, int, std::int64_t nu, std::int64_t) {
                   return P(p, 23)
                       .rel("a^" + S(p * p * p) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p * p) + " = 1")
                       .rel("[b,c] = a^" + S(p * p)).rel("[c,a] = b^" + S(p))
                       .rel("[a,b] = c^" + S(nu * p))
                       .done();
                 },
                 [](std::int64_t p, int) {
                   return std::vector<std::string>{"b", "c", "a^" + S(p)};
                 },
                 [](std::int64_t p, int) { return mp1_label(p, 2, 2) + " * C" + S(p * p); }});
    // (24)
    t.push_back({24, 'g', -1, 7, 0, 3, 3,
                 [P](std::int64_t p, int, std::int64_t r, std::int64_t) {
                   return P(p, 24)
                       .rel("a^" + S(p * p * p) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p * p) + " = 1")
                       .rel("[b,c] = a^" + S(p * p))
                       .rel("[c,a]^" + S(1 + r) + " = b^" + S(r * p) + " c^-" + S(p))
                       .rel("[a,b]^" + S(1 + r) + " = b^" + S(p) + " c^" + S(p))
                       .done();
                 },
                 [](std::int64_t p, int) {
                   return std::vector<std::string>{"b", "c", "a^" + S(p)};
                 },
                 [](std::int64_t p, int) { return mp1_label(p, 2, 2) + " * C" + S(p * p); }});
    // (25)
    t.push_back({25, 'g', 2, 3, 1, 1, 1,
                 [P](std::int64_t p, int n, std::int64_t nu, std::int64_t) {
                   return P(p, 25)
                       .rel("a^" + S(ipow(p, n + 1)) + " = 1").rel("b^" + S(p) + " = 1")
                       .rel("c^" + S(p) + " = 1")
                       .rel("[a,b] = c").rel("[c,a] = 1")
                       .rel("[c,b] = a^" + S(nu * ipow(p, n)))
                       .done();
                 },
                 [](std::int64_t p, int n) {
                   return std::vector<std::string>{"c", "b", "a^" + S(ipow(p, n - 1))};
                 },
                 [](std::int64_t p, int) { return mp1_label(p, 1, 1) + " * C" + S(p * p); }});
    // (26)
    t.push_back({26, 'g', 2, 3, 1, 1, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 26)
                       .rel("a^" + S(ipow(p, n)) + " = 1").rel("b^" + S(p * p) + " = 1")
                       .rel("c^" + S(p) + " = 1")
                       .rel("[a,b] = c").rel("[c,a] = 1").rel("[c,b] = b^" + S(p))
                       .done();
                 },
                 [](std::int64_t p, int n) {
                   return std::vector<std::string>{"b", "c", "a^" + S(ipow(p, n - 1))};
                 },
                 [](std::int64_t p, int) { return mp_label(p, 2, 1) + " x C" + S(p); }});
    // (27)
    t.push_back({27, 'g', 2, 3, 1, 1, 0,
                 [](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return PresBuilder("thm3_6_27", p, "a b c d")
                       .rel("a^" + S(ipow(p, n)) + " = 1").rel("b^" + S(p) + " = 1")
                       .rel("c^" + S(p) + " = 1").rel("d^" + S(p) + " = 1")
                       .rel("[a,b] = c").rel("[c,a] = 1").rel("[c,b] = d")
                       .rel("[d,a] = 1").rel("[d,b] = 1")
                       .done();
                 },
                 [](std::int64_t p, int n) {
                   return std::vector<std::string>{"c", "b", "a^" + S(ipow(p, n - 1))};
                 },
                 [](std::int64_t p, int) { return mp1_label(p, 1, 1) + " x C" + S(p); }});
    // (28): n >= 1 inferred from the A_(n+2) claim
    t.push_back({28, 'g', 1, 4, 1, 2, 0,
                 [P](std::int64_t p, int n, std::int64_t, std::int64_t) {
                   return P(p, 28)
                       .rel("a^" + S(p * p) + " = 1").rel("b^" + S(p) + " = 1")
                       .rel("c^" + S(ipow(p, n + 1)) + " = 1")
                       .rel("[b,c] = 1").rel("[c,a] = c^" + S(ipow(p, n)))
                       .rel("[a,b] = a^" + S(p))
                       .done();
                 },
                 [](std::int64_t p, int n) {
                   return std::vector<std::string>{"a", "b", "c^" + S(ipow(p, n))};
                 },
                 [](std::int64_t p, int) { return mp_label(p, 2, 1) + " x C" + S(p); }});
    return t;
  }();
  return table;
}

CatalogEntry make_thm36_entry(const Thm36Spec& spec) {
  CatalogEntry e;
  e.id = "thm3.6." + S(spec.num);
  e.summary = "unique-A2 family (" + S(spec.num) + "), " + prime_domain_text(spec.pdom);

  auto read = [spec](const Params& params) {
    const std::int64_t p = param_int(params, "p");
    const int n = spec.nmin >= 0 ? static_cast<int>(param_int(params, "n")) : 0;
    std::int64_t v1 = 0, v2 = 0;
    if (spec.nu_mode == 1 || spec.nu_mode == 4) v1 = param_int(params, "nu");
    if (spec.nu_mode == 2) {
      v1 = param_int(params, "nu1");
      v2 = param_int(params, "nu2");
    }
    if (spec.nu_mode == 3) v1 = param_int(params, "r");
    return std::tuple<std::int64_t, int, std::int64_t, std::int64_t>{p, n, v1, v2};
  };

  e.invalid = [spec, read](const Params& params) -> std::optional<std::string> {
    const auto [p, n, v1, v2] = read(params);
    if (!is_prime(p)) return "p must be prime";
    if (!prime_in_domain(p, spec.pdom)) return prime_domain_text(spec.pdom) + " violated";
    if (spec.nmin >= 0 && n < spec.nmin) return "n >= " + S(spec.nmin) + " violated";
    auto nu_ok = [&](std::int64_t v) { return v == 1 || v == nonresidue(p); };
    if ((spec.nu_mode == 1 || spec.nu_mode == 4) && !nu_ok(v1))
      return "nu must be 1 or the fixed quadratic non-residue";
    if (spec.nu_mode == 2 && (!nu_ok(v1) || !nu_ok(v2)))
      return "nu1, nu2 must be 1 or the fixed quadratic non-residue";
    if (spec.nu_mode == 4 && !is_nonresidue(-v1, p)) return "-nu must be a quadratic non-residue";
    if (spec.nu_mode == 3) {
      if (v1 < 1 || v1 > p - 2) return "r must lie in 1..p-2";
      if (!is_nonresidue(-v1, p)) return "-r must be a quadratic non-residue";
    }
    return std::nullopt;
  };

  e.build_fn = [spec, read, e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    const auto [p, n, v1, v2] = read(params);
    return spec.pres(p, n, v1, v2);
  };

  e.expected_fn = [spec, read, e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    const auto [p, n, v1, v2] = read(params);
    (void)v1;
    (void)v2;
    ExpectedClaims c;
    c.order = ipow(p, n + spec.order_add);
    c.level = spec.level_coef * n + spec.level_add;
    c.unique_a2 = true;
    c.k_gen_words = spec.kgens(p, n);
    c.k_label = spec.klabel(p, n);
    c.k_in_frattini = false;
    return c;
  };

  e.grid_fn = [spec](const Caps& caps) {
    std::vector<Params> out;
    for (std::int64_t p : caps.primes) {
      if (!prime_in_domain(p, spec.pdom)) continue;
      std::vector<int> ns;
      if (spec.nmin < 0) {
        if (ipow(p, spec.order_add) <= caps.max_order) ns.push_back(0);
      } else {
        for (int n = spec.nmin; n <= caps.max_n; ++n)
          if (ipow(p, n + spec.order_add) <= caps.max_order) ns.push_back(n);
      }
      std::vector<std::vector<std::pair<std::string, std::int64_t>>> nu_sets = {{}};
      if (spec.nu_mode == 1 || spec.nu_mode == 4) {
        nu_sets.clear();
        for (std::int64_t v : {std::int64_t{1}, nonresidue(p)}) {
          if (spec.nu_mode == 4 && !is_nonresidue(-v, p)) continue;
          nu_sets.push_back({{"nu", v}});
        }
      } else if (spec.nu_mode == 2) {
        nu_sets.clear();
        for (std::int64_t v1 : {std::int64_t{1}, nonresidue(p)})
          for (std::int64_t v2 : {std::int64_t{1}, nonresidue(p)})
            nu_sets.push_back({{"nu1", v1}, {"nu2", v2}});
      } else if (spec.nu_mode == 3) {
        nu_sets.clear();
        for (std::int64_t r = 1; r <= p - 2; ++r)
          if (is_nonresidue(-r, p)) nu_sets.push_back({{"r", r}});
      }
      for (int n : ns) {
        for (const auto& nuset : nu_sets) {
          Params params{{"p", S(p)}};
          if (spec.nmin >= 0) params["n"] = S(n);
          for (const auto& [k, v] : nuset) params[k] = S(v);
          out.push_back(std::move(params));
        }
      }
    }
    return out;
  };
  return e;
}

// ---------------------------------------------------------------------------
// Theorem 3.1, Theorem 3.7 and the Redei families

CatalogEntry make_thm31_entry() {
  CatalogEntry e;
  e.id = "thm3.1";
  e.summary = "H * C with H non-abelian of order p^3 and C cyclic";

  auto h_types = [](std::int64_t p) -> std::vector<std::string> {
    if (p == 2) return {"d8", "q8"};
    return {"mp111", "mp21"};
  };

  e.invalid = [h_types](const Params& params) -> std::optional<std::string> {
    const std::int64_t p = param_int(params, "p");
    if (!is_prime(p)) return "p must be prime";
    const std::string h = param_str(params, "h");
    const auto hs = h_types(p);
    if (std::find(hs.begin(), hs.end(), h) == hs.end())
      return "h must name a non-abelian group of order p^3 for this prime";
    const std::int64_t j = param_int(params, "j");
    const std::string variant = param_str(params, "variant");
    if (variant != "direct" && variant != "amalgam") return "variant must be direct or amalgam";
    if (j < 1) return "|C| = p^j needs j >= 1";
    if (variant == "amalgam" && j < 2) return "amalgamated variant needs |C| >= p^2";
    return std::nullopt;
  };

  e.build_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    const std::int64_t p = param_int(params, "p");
    const std::string h = param_str(params, "h");
    const std::int64_t j = param_int(params, "j");
    const bool amalgam = param_str(params, "variant") == "amalgam";

    std::string gens = h == "mp111" ? "x y z c" : "x y c";
    PresBuilder b("thm3_1", p, gens);
    std::string hprime;  // generator word of H'
    if (h == "d8") {
      b.rel("x^4 = 1").rel("y^2 = 1").rel("[x,y] = x^2");
      hprime = "x^2";
    } else if (h == "q8") {
      b.rel("x^4 = 1").rel("y^2 = x^2").rel("[x,y] = x^2");
      hprime = "x^2";
    } else if (h == "mp111") {
      b.rel("x^" + S(p) + " = 1").rel("y^" + S(p) + " = 1").rel("z^" + S(p) + " = 1");
      b.rel("[x,y] = z").rel("[z,x] = 1").rel("[z,y] = 1");
      hprime = "z";
    } else {  // mp21
      b.rel("x^" + S(p * p) + " = 1").rel("y^" + S(p) + " = 1").rel("[x,y] = x^" + S(p));
      hprime = "x^" + S(p);
    }
    b.rel("c^" + S(ipow(p, j)) + " = 1");
    b.rel("[x,c] = 1").rel("[y,c] = 1");
    if (h == "mp111") b.rel("[z,c] = 1");
    if (amalgam) b.rel("c^" + S(ipow(p, j - 1)) + " = " + hprime);
    return b.done();
  };

  e.expected_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    const std::int64_t p = param_int(params, "p");
    const std::int64_t j = param_int(params, "j");
    const bool amalgam = param_str(params, "variant") == "amalgam";
    ExpectedClaims c;
    c.order = ipow(p, 3 + j - (amalgam ? 1 : 0));
    c.unique_a2 = true;
    c.check_k_omega1 = true;
    return c;
  };

  e.grid_fn = [h_types](const Caps& caps) {
    std::vector<Params> out;
    for (std::int64_t p : caps.primes) {
      for (const std::string& h : h_types(p)) {
        for (const std::string& variant : {std::string("direct"), std::string("amalgam")}) {
          for (std::int64_t j = variant == "amalgam" ? 2 : 1; j <= 3; ++j) {
            const std::int64_t order = ipow(p, 3 + j - (variant == "amalgam" ? 1 : 0));
            if (order > caps.max_order) continue;
            out.push_back({{"p", S(p)}, {"h", h}, {"j", S(j)}, {"variant", variant}});
          }
        }
      }
    }
    return out;
  };
  return e;
}

CatalogEntry make_thm37_entry() {
  CatalogEntry e;
  e.id = "thm3.7";
  e.summary = "the order-64 group with a unique A2-subgroup inside Phi(G)";
  e.invalid = [](const Params& params) -> std::optional<std::string> {
    if (!params.empty()) return "entry takes no parameters";
    return std::nullopt;
  };
  e.build_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    return PresBuilder("thm3_7", 2, "a b c d")
        .rel("a^4 = 1").rel("b^4 = 1").rel("c^2 = 1").rel("d^2 = 1")
        .rel("[b,a] = c").rel("[c,a] = d").rel("[d,a] = b^2")
        .rel("[c,b] = 1").rel("[d,b] = 1").rel("[d,c] = 1")
        .done();
  };
  e.expected_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    ExpectedClaims c;
    c.order = 64;
    c.level = 4;
    c.unique_a2 = true;
    c.k_gen_words = {"a^2", "c", "d"};
    c.k_label = "D8 x C2";
    c.k_in_frattini = true;
    return c;
  };
  e.grid_fn = [](const Caps& caps) {
    std::vector<Params> out;
    if (caps.max_order >= 64 &&
        std::find(caps.primes.begin(), caps.primes.end(), 2) != caps.primes.end())
      out.push_back({});
    return out;
  };
  return e;
}

CatalogEntry make_mp_nm_entry() {
  CatalogEntry e;
  e.id = "mp-nm";
  e.summary = "Redei metacyclic minimal non-abelian M_p(n,m)";
  e.invalid = [](const Params& params) -> std::optional<std::string> {
    const std::int64_t p = param_int(params, "p");
    if (!is_prime(p)) return "p must be prime";
    if (param_int(params, "n") < 2) return "n >= 2 violated";
    if (param_int(params, "m") < 1) return "m >= 1 violated";
    return std::nullopt;
  };
  e.build_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    return mp_nm_presentation(param_int(params, "p"), static_cast<int>(param_int(params, "n")),
                              static_cast<int>(param_int(params, "m")));
  };
  e.expected_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    ExpectedClaims c;
    c.order = ipow(param_int(params, "p"), param_int(params, "n") + param_int(params, "m"));
    c.level = 1;
    c.unique_a2 = false;
    return c;
  };
  e.grid_fn = [](const Caps& caps) {
    std::vector<Params> out;
    for (std::int64_t p : caps.primes)
      for (int n = 2; n <= caps.max_n; ++n)
        for (int m = 1; m <= caps.max_n; ++m)
          if (ipow(p, n + m) <= caps.max_order)
            out.push_back({{"p", S(p)}, {"n", S(n)}, {"m", S(m)}});
    return out;
  };
  return e;
}

CatalogEntry make_mp_nm1_entry() {
  CatalogEntry e;
  e.id = "mp-nm1";
  e.summary = "Redei non-metacyclic minimal non-abelian M_p(n,m,1)";
  e.invalid = [](const Params& params) -> std::optional<std::string> {
    const std::int64_t p = param_int(params, "p");
    if (!is_prime(p)) return "p must be prime";
    const std::int64_t n = param_int(params, "n");
    const std::int64_t m = param_int(params, "m");
    if (n < m || m < 1) return "n >= m >= 1 violated";
    if (p == 2 && n + m < 3) return "p = 2 requires n + m >= 3";
    return std::nullopt;
  };
  e.build_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    return mp_nm1_presentation(param_int(params, "p"), static_cast<int>(param_int(params, "n")),
                               static_cast<int>(param_int(params, "m")));
  };
  e.expected_fn = [e_invalid = e.invalid](const Params& params) {
    if (auto why = e_invalid(params)) throw InvalidParameters(*why);
    ExpectedClaims c;
    c.order = ipow(param_int(params, "p"), param_int(params, "n") + param_int(params, "m") + 1);
    c.level = 1;
    c.unique_a2 = false;
    return c;
  };
  e.grid_fn = [](const Caps& caps) {
    std::vector<Params> out;
    for (std::int64_t p : caps.primes)
      for (int n = 1; n <= caps.max_n; ++n)
        for (int m = 1; m <= n; ++m) {
          if (p == 2 && n + m < 3) continue;
          if (ipow(p, n + m + 1) <= caps.max_order)
            out.push_back({{"p", S(p)}, {"n", S(n)}, {"m", S(m)}});
        }
    return out;
  };
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    out.push_back(make_thm31_entry());
    for (const Thm36Spec& spec : thm36_table()) out.push_back(make_thm36_entry(spec));
    out.push_back(make_thm37_entry());
    out.push_back(make_mp_nm_entry());
    out.push_back(make_mp_nm1_entry());
    return out;
  }();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

Presentation build_catalog(const std::string& id, const Params& params) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw InvalidParameters("unknown catalog id '" + id + "'");
  return e->build_fn(params);
}

ExpectedClaims expected_claims(const std::string& id, const Params& params) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw InvalidParameters("unknown catalog id '" + id + "'");
  return e->expected_fn(params);
}

std::vector<Params> parameter_grid(const std::string& id, const Caps& caps) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw InvalidParameters("unknown catalog id '" + id + "'");
  return e->grid_fn(caps);
}

}  // namespace pgroup
