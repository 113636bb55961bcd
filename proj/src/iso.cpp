#include "pgroup/iso.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"

namespace pgroup {

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> element_order_histogram(
    const ConcreteGroup& g) {
  std::map<std::int64_t, std::int64_t> hist;
  for (std::int64_t x = 0; x < g.order(); ++x) ++hist[g.element_order(static_cast<int>(x))];
  return {hist.begin(), hist.end()};
}

// Centralizer orders indexed by element; O(order^2) table walks.
std::vector<std::int64_t> centralizer_sizes(const ConcreteGroup& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<std::int64_t> out(n, 0);
  std::vector<int> left, right;
  for (std::size_t x = 0; x < n; ++x) {
    g.fill_left_mul(static_cast<int>(x), left);
    g.fill_right_mul(static_cast<int>(x), right);
    std::int64_t c = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (left[y] == right[y]) ++c;
    out[x] = c;
  }
  return out;
}

struct IsoSearch {
  const ConcreteGroup& a;
  const ConcreteGroup& b;
  std::vector<int> gens;                       // generating tuple of a
  std::vector<std::vector<int>> candidates;    // per position
  std::vector<int> f;                          // partial map a -> b (-1 unset)
  std::vector<char> in_closure;                // membership in <gens placed so far>
  std::vector<char> used;                      // image taken in b
  std::vector<int> elems;                      // closure elements, insertion order

  bool extend(std::size_t pos) {
    if (pos == gens.size())
      return static_cast<std::int64_t>(elems.size()) == a.order();

    const int gen = gens[pos];
    if (in_closure[static_cast<std::size_t>(gen)]) {
      // Image forced; just recurse if it is a listed candidate.
      return extend_with(pos, f[static_cast<std::size_t>(gen)]);
    }
    for (int cand : candidates[pos]) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (extend_with(pos, cand)) return true;
    }
    return false;
  }

  bool extend_with(std::size_t pos, int image) {
    const int gen = gens[pos];
    const std::size_t elems_mark = elems.size();
    bool ok = true;

    if (!in_closure[static_cast<std::size_t>(gen)]) {
      in_closure[static_cast<std::size_t>(gen)] = 1;
      f[static_cast<std::size_t>(gen)] = image;
      used[static_cast<std::size_t>(image)] = 1;
      elems.push_back(gen);
    } else if (f[static_cast<std::size_t>(gen)] != image) {
      return false;
    }

    // Close under the generators placed so far, checking the homomorphism
    // property on every edge and injectivity on every new assignment.
    for (std::size_t head = 0; head < elems.size() && ok; ++head) {
      const int x = elems[head];
      for (std::size_t j = 0; j <= pos && ok; ++j) {
        const int y = a.mul(x, gens[j]);
        const int fy = b.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(gens[j])]);
        if (in_closure[static_cast<std::size_t>(y)]) {
          if (f[static_cast<std::size_t>(y)] != fy) ok = false;
        } else if (used[static_cast<std::size_t>(fy)]) {
          ok = false;
        } else {
          in_closure[static_cast<std::size_t>(y)] = 1;
          f[static_cast<std::size_t>(y)] = fy;
          used[static_cast<std::size_t>(fy)] = 1;
          elems.push_back(y);
        }
      }
    }

    if (ok && extend(pos + 1)) return true;

    // Roll back everything added at this position.
    while (elems.size() > elems_mark) {
      const int x = elems.back();
      elems.pop_back();
      used[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] = 0;
      f[static_cast<std::size_t>(x)] = -1;
      in_closure[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  }
};

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " exp=" << exponent << " class=" << nilpotency_class
     << " d=" << d << " |G'|=" << derived_order << " |Z|=" << center_order << " ab=[";
  for (std::size_t i = 0; i < abelianization.size(); ++i)
    os << (i ? "," : "") << abelianization[i];
  os << "] orders={";
  for (std::size_t i = 0; i < order_histogram.size(); ++i)
    os << (i ? "," : "") << order_histogram[i].first << ":" << order_histogram[i].second;
  os << "}";
  if (subgroup_counts) {
    os << " subs={";
    for (std::size_t i = 0; i < subgroup_counts->size(); ++i)
      os << (i ? "," : "") << (*subgroup_counts)[i].first << ":" << (*subgroup_counts)[i].second;
    os << "}";
  }
  return os.str();
}

Fingerprint fingerprint(GroupRef g) {
  Fingerprint fp;
  Subgroup full = full_subgroup(g);
  fp.order = g->order();
  fp.exponent = exponent_of(full);
  fp.nilpotency_class = nilpotency_class(full);
  fp.d = min_gens(full);
  Subgroup der = derived_subgroup(full);
  fp.derived_order = der.order();
  fp.center_order = center(full).order();
  fp.abelianization = abelian_invariants(full_subgroup(quotient(g, der).quotient));
  fp.order_histogram = element_order_histogram(*g);
  return fp;
}

Fingerprint fingerprint(GroupRef g, std::int64_t lattice_cap) {
  Fingerprint fp = fingerprint(g);
  if (g->order() <= lattice_cap) {
    std::map<std::int64_t, std::int64_t> counts;
    for (const Subgroup& s : all_subgroups(full_subgroup(g), lattice_cap)) ++counts[s.order()];
    fp.subgroup_counts = std::vector<std::pair<std::int64_t, std::int64_t>>(counts.begin(),
                                                                            counts.end());
  }
  return fp;
}

bool is_isomorphic(GroupRef aref, GroupRef bref, std::int64_t iso_cap) {
  const ConcreteGroup& a = *aref;
  const ConcreteGroup& b = *bref;
  if (a.order() != b.order()) return false;
  if (a.order() > iso_cap)
    throw IsoCapExceeded("isomorphism test on order " + std::to_string(a.order()) +
                         " exceeds cap " + std::to_string(iso_cap));
  if (element_order_histogram(a) != element_order_histogram(b)) return false;

  IsoSearch search{a, b, {}, {}, {}, {}, {}, {}};
  for (int gi = 0; gi < a.num_generators(); ++gi) {
    const int e = a.generator(gi);
    if (std::find(search.gens.begin(), search.gens.end(), e) == search.gens.end())
      search.gens.push_back(e);
  }

  const std::vector<std::int64_t> cent_a = centralizer_sizes(a);
  const std::vector<std::int64_t> cent_b = centralizer_sizes(b);
  {
    std::vector<std::int64_t> ha = cent_a, hb = cent_b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }

  search.candidates.resize(search.gens.size());
  for (std::size_t i = 0; i < search.gens.size(); ++i) {
    const int gen = search.gens[i];
    const std::int64_t ord = a.element_order(gen);
    for (std::int64_t h = 0; h < b.order(); ++h)
      if (b.element_order(static_cast<int>(h)) == ord &&
          cent_b[static_cast<std::size_t>(h)] == cent_a[static_cast<std::size_t>(gen)])
        search.candidates[i].push_back(static_cast<int>(h));
  }

  const std::size_t n = static_cast<std::size_t>(a.order());
  search.f.assign(n, -1);
  search.in_closure.assign(n, 0);
  search.used.assign(n, 0);
  search.in_closure[0] = 1;
  search.f[0] = 0;
  search.used[0] = 1;
  search.elems.push_back(0);
  return search.extend(0);
}

std::optional<std::string> recognize(GroupRef g, std::int64_t iso_cap) {
  if (g->order() > iso_cap)
    throw IsoCapExceeded("recognition on order " + std::to_string(g->order()) +
                         " exceeds cap " + std::to_string(iso_cap));
  Subgroup full = full_subgroup(g);
  if (is_abelian(full)) return abelian_label(abelian_invariants(full));
  for (const std::string& label : label_candidates(g->prime(), g->order())) {
    GroupRef cand = build_label(label);
    if (is_isomorphic(g, cand, iso_cap)) return label;
  }
  return std::nullopt;
}

}  // namespace pgroup
