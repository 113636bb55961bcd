#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/engine.hpp"
#include "pgroup/presentation.hpp"

namespace pgroup {

// Parameter assignments are kept as strings for uniform CLI/report
// handling; numeric values are decimal.
using Params = std::map<std::string, std::string>;

struct Caps {
  std::vector<std::int64_t> primes = {2, 3, 5};
  int max_n = 4;
  std::int64_t max_order = 6561;
  std::int64_t lattice_cap = 6561;
  std::int64_t iso_cap = 4096;
  std::int64_t max_cosets = 500000;
};

// Claims attached to a catalog entry, instantiated per parameter tuple.
// Absent fields are unclaimed and ignored by verification.
struct ExpectedClaims {
  std::optional<std::int64_t> order;
  std::optional<int> level;
  std::optional<bool> unique_a2;
  std::vector<std::string> k_gen_words;  // words generating the A2-subgroup
  std::optional<std::string> k_label;    // named-group label
  std::optional<bool> k_in_frattini;
  bool check_k_omega1 = false;  // K/G' must equal Omega_1(G/G')
};

struct CatalogEntry {
  std::string id;
  std::string summary;
  // Returns the violated condition, or nullopt when params are valid.
  std::function<std::optional<std::string>(const Params&)> invalid;
  std::function<Presentation(const Params&)> build_fn;
  std::function<ExpectedClaims(const Params&)> expected_fn;
  std::function<std::vector<Params>(const Caps&)> grid_fn;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& id);

// Throw InvalidParameters when the entry rejects params.
Presentation build_catalog(const std::string& id, const Params& params);
ExpectedClaims expected_claims(const std::string& id, const Params& params);
std::vector<Params> parameter_grid(const std::string& id, const Caps& caps);

// Smallest positive quadratic non-residue mod an odd prime (Euler test).
std::int64_t nonresidue(std::int64_t p);
bool is_nonresidue(std::int64_t a, std::int64_t p);

std::int64_t param_int(const Params& params, const std::string& key);
std::string param_str(const Params& params, const std::string& key);
std::string params_to_string(const Params& params);

// Fixed model presentations.
Presentation d8_presentation();
Presentation q8_presentation();
Presentation mp_nm_presentation(std::int64_t p, int n, int m);
Presentation mp_nm1_presentation(std::int64_t p, int n, int m);
Presentation cyclic_presentation(std::int64_t p, int k);
Presentation abelian_presentation(std::int64_t p, const std::vector<std::int64_t>& orders);

// Named-group labels: "C9", "C4 x C2", "D8", "Q8", "M3(2,1)",
// "M2(2,2,1) * C4", "D8 x C2 x C2", ...  A central label "X * Cq"
// amalgamates X' with the order-p subgroup of the cyclic factor.
GroupRef build_label(const std::string& label, std::int64_t max_cosets = 500000);
// Candidate labels of the given order in fixed recognition order.
std::vector<std::string> label_candidates(std::int64_t p, std::int64_t order);
std::string abelian_label(const std::vector<std::int64_t>& invariants);

}  // namespace pgroup
