#include "pgroup/verify.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/iso.hpp"

namespace pgroup {

using ordered_json = nlohmann::ordered_json;

bool glob_match(const std::string& pattern, const std::string& text) {
  // Wildcards: '*' any run, '?' one character.
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::int64_t VerifyReport::passed() const {
  std::int64_t n = 0;
  for (const auto& r : records)
    if (r.verdict == "pass") ++n;
  return n;
}
std::int64_t VerifyReport::failed() const {
  std::int64_t n = 0;
  for (const auto& r : records)
    if (r.verdict == "fail") ++n;
  return n;
}
std::int64_t VerifyReport::skipped() const {
  std::int64_t n = 0;
  for (const auto& r : records)
    if (r.verdict == "skipped") ++n;
  return n;
}

VerificationRecord verify_tuple(const std::string& id, const Params& params, const Caps& caps) {
  VerificationRecord rec;
  rec.entry = id;
  rec.params = params;
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&rec](const std::string& what) { rec.failures.push_back(what); };

  try {
    const CatalogEntry* entry = find_entry(id);
    if (!entry) throw InvalidParameters("unknown catalog id '" + id + "'");
    const ExpectedClaims exp = entry->expected_fn(params);

    rec.expected.order = exp.order;
    rec.expected.level = exp.level;
    if (exp.unique_a2 && *exp.unique_a2) rec.expected.alpha2 = 1;
    rec.expected.k_gens = exp.k_gen_words;
    rec.expected.k_iso_label = exp.k_label;
    rec.expected.k_in_frattini = exp.k_in_frattini;

    const Presentation pres = entry->build_fn(params);
    GroupRef g = ConcreteGroup::enumerate(pres, caps.max_cosets);
    rec.computed.order = g->order();
    if (exp.order && g->order() != *exp.order) fail("order");

    const AtReport rep = analyze_levels(g, caps.lattice_cap);
    rec.computed.level = rep.level;
    rec.computed.alpha1 = rep.alpha_of(1);
    rec.computed.alpha2 = rep.alpha_of(2);
    if (exp.level && rep.level != *exp.level) fail("level");
    if (exp.unique_a2 && (rep.alpha_of(2) == 1) != *exp.unique_a2) fail("unique_a2");

    if (rep.unique_a2) {
      rec.computed.k_in_frattini = rep.a2_in_frattini;
      for (int kg : rep.unique_a2->gens)
        rec.computed.k_gens.push_back(word_to_string(g->repr_word(kg), pres));
    }
    if (exp.k_in_frattini &&
        (!rep.unique_a2 || rep.a2_in_frattini != *exp.k_in_frattini))
      fail("k_in_frattini");

    if (!exp.k_gen_words.empty()) {
      if (!rep.unique_a2) {
        fail("k_gens");
      } else {
        std::vector<int> seed;
        for (const std::string& w : exp.k_gen_words)
          seed.push_back(g->eval_word(parse_word(w, pres)));
        if (!(closure(g, seed).members == rep.unique_a2->members)) fail("k_gens");
      }
    }

    if (exp.k_label) {
      if (!rep.unique_a2) {
        fail("k_label");
      } else {
        GroupRef k = materialize(*rep.unique_a2);
        GroupRef model = build_label(*exp.k_label, caps.max_cosets);
        if (is_isomorphic(k, model, caps.iso_cap)) {
          rec.computed.k_iso_label = exp.k_label;
        } else {
          rec.computed.k_iso_label = recognize(k, caps.iso_cap).value_or("unrecognized");
          fail("k_label");
        }
      }
    }

    if (exp.check_k_omega1) {
      if (!rep.unique_a2) {
        fail("k_omega1");
      } else {
        const Subgroup der = derived_subgroup(full_subgroup(g));
        const QuotientResult q = quotient(g, der);
        const Subgroup lhs = project_subgroup(q, *rep.unique_a2);
        const Subgroup rhs = omega_s(full_subgroup(q.quotient), 1);
        if (!(lhs.members == rhs.members)) fail("k_omega1");
      }
    }

    rec.verdict = rec.failures.empty() ? "pass" : "fail";
  } catch (const LatticeCapExceeded& e) {
    rec.verdict = "skipped";
    rec.skip_reason = e.what();
  } catch (const IsoCapExceeded& e) {
    rec.verdict = "skipped";
    rec.skip_reason = e.what();
  } catch (const CosetLimitExceeded& e) {
    rec.verdict = "skipped";
    rec.skip_reason = e.what();
  } catch (const InvalidParameters& e) {
    rec.verdict = "skipped";
    rec.skip_reason = std::string("invalid parameters: ") + e.what();
  } catch (const Error& e) {
    rec.verdict = "fail";
    rec.failures.push_back(std::string("exception: ") + e.what());
  }

  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

VerifyReport run_verify(const VerifyOptions& options) {
  struct Task {
    std::string id;
    Params params;
    bool empty_grid = false;
  };
  std::vector<Task> tasks;
  for (const CatalogEntry& entry : catalog()) {
    bool wanted = options.entry_globs.empty();
    for (const std::string& glob : options.entry_globs)
      if (glob_match(glob, entry.id)) wanted = true;
    if (!wanted) continue;
    const std::vector<Params> grid = entry.grid_fn(options.caps);
    if (grid.empty()) {
      tasks.push_back({entry.id, {}, true});
      continue;
    }
    for (const Params& params : grid) tasks.push_back({entry.id, params, false});
  }

  VerifyReport report;
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (tasks[i].empty_grid) {
        VerificationRecord rec;
        rec.entry = tasks[i].id;
        rec.verdict = "skipped";
        rec.skip_reason = "no parameters within caps";
        report.records[i] = std::move(rec);
      } else {
        report.records[i] = verify_tuple(tasks[i].id, tasks[i].params, options.caps);
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

namespace {

std::string claim_to_text(const ClaimValues& v) {
  std::ostringstream os;
  os << "order=" << (v.order ? std::to_string(*v.order) : "-");
  os << " level=" << (v.level ? std::to_string(*v.level) : "-");
  os << " a1=" << (v.alpha1 ? std::to_string(*v.alpha1) : "-");
  os << " a2=" << (v.alpha2 ? std::to_string(*v.alpha2) : "-");
  if (!v.k_gens.empty()) {
    os << " K=<";
    for (std::size_t i = 0; i < v.k_gens.size(); ++i) os << (i ? ", " : "") << v.k_gens[i];
    os << ">";
  }
  if (v.k_iso_label) os << " K~" << *v.k_iso_label;
  if (v.k_in_frattini) os << " KinPhi=" << (*v.k_in_frattini ? "yes" : "no");
  return os.str();
}

ordered_json claim_to_json(const ClaimValues& v) {
  ordered_json j;
  j["order"] = v.order ? ordered_json(*v.order) : ordered_json(nullptr);
  j["level"] = v.level ? ordered_json(*v.level) : ordered_json(nullptr);
  j["alpha1"] = v.alpha1 ? ordered_json(*v.alpha1) : ordered_json(nullptr);
  j["alpha2"] = v.alpha2 ? ordered_json(*v.alpha2) : ordered_json(nullptr);
  j["k_gens"] = v.k_gens;
  j["k_iso_label"] = v.k_iso_label ? ordered_json(*v.k_iso_label) : ordered_json(nullptr);
  j["k_in_frattini"] = v.k_in_frattini ? ordered_json(*v.k_in_frattini) : ordered_json(nullptr);
  return j;
}

ordered_json caps_to_json(const Caps& caps) {
  ordered_json j;
  j["p"] = caps.primes;
  j["max_n"] = caps.max_n;
  j["max_order"] = caps.max_order;
  j["lattice_cap"] = caps.lattice_cap;
  j["iso_cap"] = caps.iso_cap;
  j["max_cosets"] = caps.max_cosets;
  return j;
}

}  // namespace

std::string report_to_text(const VerifyReport& report, const VerifyOptions& options) {
  std::ostringstream os;
  for (const auto& r : report.records) {
    os << "[" << r.verdict << "] " << r.entry;
    if (!r.params.empty()) os << " (" << params_to_string(r.params) << ")";
    if (r.verdict == "skipped") {
      os << " -- " << r.skip_reason;
    } else {
      os << " computed: " << claim_to_text(r.computed);
      if (r.verdict == "fail") {
        os << " MISMATCH:";
        for (const std::string& f : r.failures) os << " " << f;
        os << " expected: " << claim_to_text(r.expected);
      }
    }
    if (!options.canonical) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << r.wall_ms;
      os << " [" << ms.str() << " ms]";
    }
    os << "\n";
  }
  os << "verify: " << report.passed() << " passed, " << report.failed() << " failed, "
     << report.skipped() << " skipped\n";
  return os.str();
}

std::string report_to_json(const VerifyReport& report, const VerifyOptions& options) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  ordered_json flags;
  flags["entries"] = options.entry_globs;
  flags["caps"] = caps_to_json(options.caps);
  flags["format"] = options.format;
  flags["canonical"] = options.canonical;
  j["flags"] = std::move(flags);
  j["records"] = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rj;
    rj["entry"] = r.entry;
    rj["params"] = r.params;
    rj["verdict"] = r.verdict;
    rj["skip_reason"] = r.skip_reason;
    rj["computed"] = claim_to_json(r.computed);
    rj["expected"] = claim_to_json(r.expected);
    rj["failures"] = r.failures;
    if (!options.canonical) rj["wall_ms"] = r.wall_ms;
    j["records"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

int report_exit_code(const VerifyReport& report) { return report.failed() > 0 ? 1 : 0; }

// ---------------------------------------------------------------------------
// Lemma suites

namespace {

struct CorpusGroup {
  std::string name;
  std::string entry_id;
  GroupRef g;
};

std::vector<CorpusGroup> build_corpus(const Caps& caps, std::int64_t max_order) {
  std::vector<CorpusGroup> out;
  for (const CatalogEntry& entry : catalog()) {
    for (const Params& params : entry.grid_fn(caps)) {
      const ExpectedClaims exp = entry.expected_fn(params);
      if (exp.order && *exp.order > max_order) continue;
      const std::string name =
          params.empty() ? entry.id : entry.id + " (" + params_to_string(params) + ")";
      out.push_back({name, entry.id, ConcreteGroup::enumerate(entry.build_fn(params),
                                                              caps.max_cosets)});
    }
  }
  return out;
}

bool is_cyclic(const Subgroup& s) { return exponent_of(s) == s.order(); }

}  // namespace

std::vector<std::pair<std::string, Presentation>> omega_hypothesis_presentations() {
  std::vector<std::pair<std::string, Presentation>> out;
  auto make = [](std::int64_t p, const std::vector<std::string>& extra_rels,
                 const std::string& name) {
    std::ostringstream os;
    os << "group " << name << "\np " << p << "\ngens a b c\n";
    for (const std::string& r : extra_rels) os << "rel " << r << "\n";
    const char* gens[] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          os << "rel [[" << gens[i] << "," << gens[j] << "]," << gens[k] << "] = 1\n";
    return parse_presentation(os.str());
  };
  out.emplace_back("rank-3 class-2 exponent-2",
                   make(2, {"a^2 = 1", "b^2 = 1", "c^2 = 1"}, "w2"));
  out.emplace_back("rank-3 class-2 exponent-3",
                   make(3, {"a^3 = 1", "b^3 = 1", "c^3 = 1"}, "w3"));
  out.emplace_back("rank-3 class-2, a of order 9",
                   make(3, {"a^9 = 1", "b^3 = 1", "c^3 = 1"}, "w9"));
  out.emplace_back("rank-3 class-2, a of order 4",
                   make(2, {"a^4 = 1", "b^2 = 1", "c^2 = 1"}, "w4"));
  out.emplace_back("rank-3 class-2 with a^9 = [b,c]",
                   make(3, {"a^27 = 1", "b^3 = 1", "c^3 = 1", "a^9 = [b,c]"}, "w27"));
  return out;
}

std::vector<LemmaResult> run_lemmas(const LemmaOptions& options) {
  const Caps& caps = options.caps;
  auto wanted = [&](const std::string& suite) {
    if (options.suites.empty()) return true;
    for (const std::string& s : options.suites)
      if (s == suite || s == "all") return true;
    return false;
  };

  std::vector<LemmaResult> results;

  // 2.1: three-way equivalence of the minimal non-abelian criteria on
  // every subgroup of every corpus group of order <= 64.
  if (wanted("2.1")) {
    LemmaResult r{"2.1", "minimal non-abelian criteria agree on all subgroups (order <= 64)",
                  0, 0, {}};
    for (const CorpusGroup& cg : build_corpus(caps, 64)) {
      ++r.groups_checked;
      for (const Subgroup& s : all_subgroups(full_subgroup(cg.g), 64)) {
        ++r.checks;
        try {
          (void)is_minimal_nonabelian(s);
        } catch (const InternalInconsistency& e) {
          r.violations.push_back(cg.name + ": " + e.what());
        }
      }
    }
    results.push_back(std::move(r));
  }

  // 2.2: level arithmetic for M x A and M * A constructions.
  if (wanted("2.2")) {
    LemmaResult r{"2.2", "at_level(M x A) = t+k and at_level(M * A) = t+k", 0, 0, {}};
    struct DirectCase {
      const char* m;
      const char* a;
      int expect;
    };
    const DirectCase direct_cases[] = {
        {"D8", "C2", 2},          {"D8", "C4", 3},          {"D8", "C2 x C2", 3},
        {"Q8", "C2", 2},          {"Q8", "C4", 3},          {"Q8", "C2 x C2", 3},
        {"M2(3,1)", "C2", 2},     {"M2(2,2)", "C2", 2},     {"M2(2,1,1)", "C2", 2},
        {"M3(1,1,1)", "C3", 2},   {"M3(2,1)", "C3", 2},     {"M3(1,1,1)", "C9", 3},
        {"M3(1,1,1)", "C3 x C3", 3}, {"M3(2,1)", "C3 x C3", 3}, {"M5(1,1,1)", "C5", 2},
    };
    for (const auto& c : direct_cases) {
      ++r.groups_checked;
      ++r.checks;
      GroupRef m = build_label(c.m, caps.max_cosets);
      GroupRef a = build_label(c.a, caps.max_cosets);
      GroupRef g = direct_product(*m, *a, caps.max_cosets);
      const int level = at_level(full_subgroup(g), caps.lattice_cap);
      if (level != c.expect)
        r.violations.push_back(std::string(c.m) + " x " + c.a + ": level " +
                               std::to_string(level) + " != " + std::to_string(c.expect));
    }
    struct CentralCase {
      const char* m;
      const char* a;          // abelian factor, |A| = p^(k+1)
      int zpow;               // the element of A identified with M' is gen0^zpow
      int expect;
    };
    const CentralCase central_cases[] = {
        {"D8", "C4", 2, 2},      {"D8", "C8", 4, 3},      {"Q8", "C4", 2, 2},
        {"Q8", "C8", 4, 3},      {"M3(1,1,1)", "C9", 3, 2}, {"M3(2,1)", "C9", 3, 2},
        {"M3(1,1,1)", "C27", 9, 3}, {"M2(2,2)", "C4", 2, 2}, {"M2(2,1,1)", "C4", 2, 2},
        {"D8", "C4 x C2", 2, 3},
    };
    for (const auto& c : central_cases) {
      ++r.groups_checked;
      ++r.checks;
      GroupRef m = build_label(c.m, caps.max_cosets);
      GroupRef a = build_label(c.a, caps.max_cosets);
      const Subgroup mder = derived_subgroup(full_subgroup(m));
      int dgen = -1;
      mder.members.for_each([&](int x) {
        if (x != 0 && dgen < 0) dgen = x;
      });
      GroupRef g =
          central_product(*m, *a, {{dgen, a->pow(a->generator(0), c.zpow)}}, caps.max_cosets);
      const int level = at_level(full_subgroup(g), caps.lattice_cap);
      if (level != c.expect)
        r.violations.push_back(std::string(c.m) + " * " + c.a + ": level " +
                               std::to_string(level) + " != " + std::to_string(c.expect));
    }
    results.push_back(std::move(r));
  }

  // 2.3: |G'| <= p |M1' M2'| for distinct maximal subgroups.
  if (wanted("2.3")) {
    LemmaResult r{"2.3", "|G'| <= p |M1' M2'| over all pairs of distinct maximal subgroups",
                  0, 0, {}};
    for (const CorpusGroup& cg : build_corpus(caps, caps.max_order)) {
      ++r.groups_checked;
      Subgroup full = full_subgroup(cg.g);
      const std::int64_t dorder = derived_subgroup(full).order();
      const std::vector<Subgroup> maxes = maximal_subgroups(full);
      std::vector<Subgroup> ders;
      ders.reserve(maxes.size());
      for (const Subgroup& m : maxes) ders.push_back(derived_subgroup(m));
      for (std::size_t i = 0; i < maxes.size(); ++i)
        for (std::size_t j = i + 1; j < maxes.size(); ++j) {
          ++r.checks;
          std::vector<int> seed = ders[i].gens;
          seed.insert(seed.end(), ders[j].gens.begin(), ders[j].gens.end());
          const std::int64_t prod = closure(cg.g, std::move(seed)).order();
          if (dorder > cg.g->prime() * prod)
            r.violations.push_back(cg.name + ": pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
        }
    }
    results.push_back(std::move(r));
  }

  // 2.4 / 2.5: cyclicity of normal subgroups inside Phi(G).
  if (wanted("2.4") || wanted("2.5")) {
    LemmaResult r24{"2.4",
                    "normal N <= Phi(G) without G-invariant type (p,p) subgroup is cyclic",
                    0, 0, {}};
    LemmaResult r25{"2.5", "normal N <= Phi(G) with cyclic Z(N) is cyclic", 0, 0, {}};
    for (const CorpusGroup& cg : build_corpus(caps, std::min<std::int64_t>(caps.lattice_cap, 1024))) {
      ++r24.groups_checked;
      ++r25.groups_checked;
      Subgroup full = full_subgroup(cg.g);
      const Subgroup phi = frattini(full);
      const std::vector<Subgroup> lattice = all_subgroups(full, caps.lattice_cap);
      const std::int64_t p = cg.g->prime();
      for (const Subgroup& n : lattice) {
        if (!n.members.subset_of(phi.members)) continue;
        if (!is_normal(full, n)) continue;
        // 2.4: qualifying N has no G-invariant subgroup of type (p,p).
        bool has_pp = false;
        for (const Subgroup& t : lattice) {
          if (t.order() != p * p || !t.members.subset_of(n.members)) continue;
          if (exponent_of(t) != p) continue;
          if (is_normal(full, t)) {
            has_pp = true;
            break;
          }
        }
        ++r24.checks;
        if (!has_pp && !is_cyclic(n)) r24.violations.push_back(cg.name);
        ++r25.checks;
        if (is_cyclic(center(n)) && !is_cyclic(n)) r25.violations.push_back(cg.name);
      }
    }
    if (wanted("2.4")) results.push_back(std::move(r24));
    if (wanted("2.5")) results.push_back(std::move(r25));
  }

  // 3.2: |G'| = p unique-A2 groups have K outside Phi(G).
  // 3.3: |G'| >= p^2: K outside Phi(G) iff some maximal subgroup is A1.
  // 3.4: unique A1 of index p + |G'| >= p^2 + unique A2 forces p = 2,
  //      d(G) = 2 and an abelian maximal subgroup.
  // levels: every A_t corpus group (t >= 2) has an A_(t-1) subgroup of index p.
  if (wanted("3.2") || wanted("3.3") || wanted("3.4") || wanted("levels")) {
    LemmaResult r32{"3.2", "unique A2-subgroup with |G'| = p lies outside Phi(G)", 0, 0, {}};
    LemmaResult r33{"3.3", "K not in Phi(G) iff some maximal subgroup is minimal non-abelian",
                    0, 0, {}};
    LemmaResult r34{"3.4", "unique A1 maximal + |G'| >= p^2 + unique A2 => p=2, d=2, abelian maximal",
                    0, 0, {}};
    LemmaResult rlv{"levels", "every A_t group (t >= 2) has an A_(t-1) subgroup of index p",
                    0, 0, {}};
    for (const CorpusGroup& cg : build_corpus(caps, std::min<std::int64_t>(caps.lattice_cap,
                                                                           caps.max_order))) {
      Subgroup full = full_subgroup(cg.g);
      const std::int64_t p = cg.g->prime();
      LevelledLattice lat;
      try {
        lat = levelled_lattice(full, caps.lattice_cap);
      } catch (const LatticeCapExceeded&) {
        continue;
      }
      const int level = lat.level_of_whole();
      std::int64_t a2 = 0;
      std::size_t a2_index = 0;
      for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
        if (lat.level[i] == 2) {
          ++a2;
          a2_index = i;
        }
      const Subgroup der = derived_subgroup(full);
      const Subgroup phi = frattini(full);

      const std::vector<Subgroup> maxes = maximal_subgroups(full);
      std::int64_t a1_maximals = 0;
      bool abelian_maximal = false;
      for (const Subgroup& m : maxes) {
        if (is_abelian(m)) abelian_maximal = true;
        if (is_minimal_nonabelian(m)) ++a1_maximals;
      }

      ++rlv.groups_checked;
      if (level >= 2) {
        ++rlv.checks;
        bool found = false;
        for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
          if (lat.subgroups[i].order() * p == cg.g->order() && lat.level[i] == level - 1)
            found = true;
        if (!found) rlv.violations.push_back(cg.name);
      }

      if (a2 == 1) {
        const bool in_phi = lat.subgroups[a2_index].members.subset_of(phi.members);
        if (der.order() == p) {
          ++r32.groups_checked;
          ++r32.checks;
          if (in_phi) r32.violations.push_back(cg.name);
        }
        if (der.order() >= p * p) {
          ++r33.groups_checked;
          ++r33.checks;
          if (!in_phi != (a1_maximals > 0)) r33.violations.push_back(cg.name);
        }
        ++r34.groups_checked;
        if (a1_maximals == 1 && der.order() >= p * p) {
          ++r34.checks;
          if (!(p == 2 && min_gens(full) == 2 && abelian_maximal))
            r34.violations.push_back(cg.name);
        }
      }
    }
    if (wanted("3.2")) results.push_back(std::move(r32));
    if (wanted("3.3")) results.push_back(std::move(r33));
    if (wanted("3.4")) results.push_back(std::move(r34));
    if (wanted("levels")) results.push_back(std::move(rlv));
  }

  // 3.5: >= 2 zero principal minors of omega(G) imply alpha_2 >= 2.
  if (wanted("3.5")) {
    LemmaResult r{"3.5", "omega(G) with >= 2 zero principal minors implies alpha_2 >= 2",
                  0, 0, {}};
    for (const auto& [name, pres] : omega_hypothesis_presentations()) {
      ++r.groups_checked;
      GroupRef g = ConcreteGroup::enumerate(pres, caps.max_cosets);
      const OmegaMatrix w = omega_matrix(g);
      if (w.zero_principal_minor_count() < 2) continue;
      ++r.checks;
      std::int64_t a2 = 0;
      try {
        a2 = alpha_k(g, 2, caps.lattice_cap);
      } catch (const LatticeCapExceeded&) {
        r.violations.push_back(name + ": lattice cap exceeded");
        continue;
      }
      if (a2 < 2) r.violations.push_back(name + ": alpha2 = " + std::to_string(a2));
    }
    // Corpus groups meeting the hypotheses participate as well.
    for (const CorpusGroup& cg : build_corpus(caps, std::min<std::int64_t>(caps.lattice_cap,
                                                                           caps.max_order))) {
      OmegaMatrix w;
      try {
        w = omega_matrix(cg.g);
      } catch (const PreconditionFailed&) {
        continue;
      } catch (const DegenerateCommutators&) {
        continue;
      }
      ++r.groups_checked;
      if (w.zero_principal_minor_count() < 2) continue;
      ++r.checks;
      std::int64_t a2 = 0;
      try {
        a2 = alpha_k(cg.g, 2, caps.lattice_cap);
      } catch (const LatticeCapExceeded&) {
        continue;
      }
      if (a2 < 2) r.violations.push_back(cg.name + ": alpha2 = " + std::to_string(a2));
    }
    results.push_back(std::move(r));
  }

  return results;
}

std::string lemmas_to_text(const std::vector<LemmaResult>& results) {
  std::ostringstream os;
  for (const LemmaResult& r : results) {
    os << "lemma " << r.suite << ": " << r.description << "\n";
    os << "  groups: " << r.groups_checked << ", checks: " << r.checks
       << ", violations: " << r.violations.size() << "\n";
    for (const std::string& v : r.violations) os << "  VIOLATION " << v << "\n";
  }
  return os.str();
}

std::string lemmas_to_json(const std::vector<LemmaResult>& results) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["suites"] = ordered_json::array();
  for (const LemmaResult& r : results) {
    ordered_json rj;
    rj["suite"] = r.suite;
    rj["description"] = r.description;
    rj["groups"] = r.groups_checked;
    rj["checks"] = r.checks;
    rj["violations"] = r.violations;
    j["suites"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// analyze and scan

std::string analyze_presentation(const Presentation& pres, const AnalyzeOptions& options) {
  std::ostringstream os;
  GroupRef g = ConcreteGroup::enumerate(pres, options.caps.max_cosets);
  Subgroup full = full_subgroup(g);
  const std::int64_t p = g->prime();
  std::int64_t e = g->order();
  int exp10 = 0;
  while (e > 1) {
    e /= p;
    ++exp10;
  }
  os << "group " << pres.name << ": order " << g->order() << " = " << p << "^" << exp10 << "\n";
  os << "d(G) = " << min_gens(full) << ", class = " << nilpotency_class(full)
     << ", exp = " << exponent_of(full) << "\n";
  os << "|G'| = " << derived_subgroup(full).order() << ", |Z(G)| = " << center(full).order()
     << ", |Phi(G)| = " << frattini(full).order() << "\n";
  try {
    const AtReport rep = analyze_levels(g, options.caps.lattice_cap);
    os << "level: " << (rep.level == 0 ? std::string("abelian") : "A_" + std::to_string(rep.level));
    for (int k = 1; k <= rep.level; ++k) os << ", alpha_" << k << " = " << rep.alpha_of(k);
    os << "\n";
    if (rep.unique_a2) {
      os << "unique A2-subgroup: order " << rep.unique_a2->order() << ", in Phi(G): "
         << (rep.a2_in_frattini ? "yes" : "no") << ", gens:";
      for (int kg : rep.unique_a2->gens)
        os << " " << word_to_string(g->repr_word(kg), pres);
      try {
        GroupRef k = materialize(*rep.unique_a2);
        if (auto label = recognize(k, options.caps.iso_cap)) os << ", label: " << *label;
      } catch (const IsoCapExceeded&) {
      }
      os << "\n";
    } else {
      os << "unique A2-subgroup: none (alpha_2 != 1)\n";
    }
  } catch (const LatticeCapExceeded& ex) {
    os << "level: skipped -- " << ex.what() << "\n";
  }
  try {
    const OmegaMatrix w = omega_matrix(g);
    os << "omega(G) over GF(" << w.p << "):";
    for (int i = 0; i < 3; ++i) {
      os << " [";
      for (int j = 0; j < 3; ++j)
        os << (j ? " " : "") << w.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      os << "]";
    }
    os << ", zero principal minors: " << w.zero_principal_minor_count() << "\n";
  } catch (const PreconditionFailed&) {
    os << "omega(G): not applicable\n";
  } catch (const DegenerateCommutators& ex) {
    os << "omega(G): " << ex.what() << "\n";
  }
  return os.str();
}

ScanReport run_scan(const std::string& directory, const Caps& caps) {
  namespace fs = std::filesystem;
  ScanReport report;
  std::vector<fs::path> files;
  if (!fs::exists(directory)) {
    ScanRecord rec;
    rec.file = directory;
    rec.error = "directory does not exist";
    report.records.push_back(std::move(rec));
    return report;
  }
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".pgp")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  // Catalog groups built on demand, keyed by order.
  std::map<std::int64_t, std::vector<std::pair<std::string, GroupRef>>> candidates;
  auto candidates_for = [&](std::int64_t order) -> const auto& {
    auto it = candidates.find(order);
    if (it != candidates.end()) return it->second;
    auto& list = candidates[order];
    for (const CatalogEntry& entry : catalog()) {
      for (const Params& params : entry.grid_fn(caps)) {
        const ExpectedClaims exp = entry.expected_fn(params);
        if (!exp.order || *exp.order != order) continue;
        try {
          list.emplace_back(entry.id + (params.empty() ? "" : " " + params_to_string(params)),
                            ConcreteGroup::enumerate(entry.build_fn(params), caps.max_cosets));
        } catch (const Error&) {
        }
      }
    }
    return list;
  };

  for (const fs::path& file : files) {
    ScanRecord rec;
    rec.file = file.filename().string();
    try {
      std::ifstream in(file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      const Presentation pres = parse_presentation(buffer.str());
      GroupRef g = ConcreteGroup::enumerate(pres, caps.max_cosets);
      rec.order = g->order();
      rec.fingerprint = fingerprint(g, caps.lattice_cap).to_string();
      const std::int64_t p = g->prime();
      const std::int64_t dorder = derived_subgroup(full_subgroup(g)).order();
      try {
        const AtReport rep = analyze_levels(g, caps.lattice_cap);
        rec.alpha2 = rep.alpha_of(2);
        rec.hit = rep.alpha_of(2) == 1 && dorder >= p * p;
        if (rec.hit && rep.unique_a2) rec.k_in_frattini = rep.a2_in_frattini;
      } catch (const LatticeCapExceeded& ex) {
        rec.skip_reason = ex.what();
      }
      if (rec.hit) {
        rec.matched = "unmatched";
        for (const auto& [name, cand] : candidates_for(g->order())) {
          try {
            if (is_isomorphic(g, cand, caps.iso_cap)) {
              rec.matched = name;
              break;
            }
          } catch (const IsoCapExceeded&) {
            rec.matched = "unmatched (iso cap)";
            break;
          }
        }
      }
    } catch (const Error& e) {
      rec.error = e.what();
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::int64_t ScanReport::errors() const {
  std::int64_t n = 0;
  for (const auto& r : records)
    if (!r.error.empty()) ++n;
  return n;
}

std::string scan_to_text(const ScanReport& report) {
  std::ostringstream os;
  std::int64_t hits = 0, matched = 0;
  for (const auto& r : report.records) {
    os << r.file << ": ";
    if (!r.error.empty()) {
      os << "ERROR " << r.error << "\n";
      continue;
    }
    os << "order " << r.order;
    if (!r.skip_reason.empty()) {
      os << ", skipped -- " << r.skip_reason;
    } else {
      os << ", alpha2 = " << (r.alpha2 ? std::to_string(*r.alpha2) : "-");
      if (r.hit) {
        ++hits;
        os << ", HIT (alpha2 = 1, |G'| >= p^2)";
        if (r.k_in_frattini) os << ", K in Phi(G): " << (*r.k_in_frattini ? "yes" : "no");
        os << ", matched: " << r.matched;
        if (r.matched != "unmatched") ++matched;
      }
    }
    os << "\n";
  }
  os << "scan: " << report.records.size() << " files, " << hits << " hits, " << matched
     << " matched, " << report.errors() << " errors\n";
  return os.str();
}

std::string scan_to_json(const ScanReport& report) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["records"] = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rj;
    rj["file"] = r.file;
    rj["error"] = r.error;
    rj["order"] = r.order;
    rj["alpha2"] = r.alpha2 ? ordered_json(*r.alpha2) : ordered_json(nullptr);
    rj["hit"] = r.hit;
    rj["k_in_frattini"] =
        r.k_in_frattini ? ordered_json(*r.k_in_frattini) : ordered_json(nullptr);
    rj["matched"] = r.matched;
    rj["fingerprint"] = r.fingerprint;
    rj["skip_reason"] = r.skip_reason;
    j["records"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

}  // namespace pgroup
