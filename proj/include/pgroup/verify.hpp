#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/atlevel.hpp"
#include "pgroup/catalog.hpp"

namespace pgroup {

inline constexpr const char* kToolVersion = "1.0.0";

struct VerifyOptions {
  Caps caps;
  std::vector<std::string> entry_globs;  // empty = every entry
  bool canonical = false;                // no wall times in reports
  std::string format = "text";           // text | json
  int jobs = 1;
};

// One side of a verification record (computed or expected); absent fields
// are unclaimed.
struct ClaimValues {
  std::optional<std::int64_t> order;
  std::optional<int> level;
  std::optional<std::int64_t> alpha1;
  std::optional<std::int64_t> alpha2;
  std::vector<std::string> k_gens;
  std::optional<std::string> k_iso_label;
  std::optional<bool> k_in_frattini;
};

struct VerificationRecord {
  std::string entry;
  Params params;
  std::string verdict;  // pass | fail | skipped
  std::string skip_reason;
  ClaimValues computed;
  ClaimValues expected;
  std::vector<std::string> failures;  // claim names that mismatched
  double wall_ms = 0;
};

struct VerifyReport {
  std::vector<VerificationRecord> records;
  std::int64_t passed() const;
  std::int64_t failed() const;
  std::int64_t skipped() const;
};

// Verifies one parameter tuple of one entry against its expected claims.
VerificationRecord verify_tuple(const std::string& id, const Params& params, const Caps& caps);

// Sweeps every matching entry over its parameter grid (empty grids yield
// one skipped record).  Deterministic output independent of jobs.
VerifyReport run_verify(const VerifyOptions& options);

std::string report_to_text(const VerifyReport& report, const VerifyOptions& options);
std::string report_to_json(const VerifyReport& report, const VerifyOptions& options);
int report_exit_code(const VerifyReport& report);

bool glob_match(const std::string& pattern, const std::string& text);

// ---------------------------------------------------------------------------
// Lemma property suites

struct LemmaResult {
  std::string suite;
  std::string description;
  std::int64_t groups_checked = 0;
  std::int64_t checks = 0;
  std::vector<std::string> violations;
};

struct LemmaOptions {
  Caps caps;
  std::vector<std::string> suites;  // empty = all
};

std::vector<LemmaResult> run_lemmas(const LemmaOptions& options);
std::string lemmas_to_text(const std::vector<LemmaResult>& results);
std::string lemmas_to_json(const std::vector<LemmaResult>& results);

// Groups meeting the omega-matrix hypotheses with every principal minor
// zero, used by the 3.5 suite and its acceptance criterion.
std::vector<std::pair<std::string, Presentation>> omega_hypothesis_presentations();

// ---------------------------------------------------------------------------
// Single-group analysis and directory scans

struct AnalyzeOptions {
  Caps caps;
};

std::string analyze_presentation(const Presentation& pres, const AnalyzeOptions& options);

struct ScanRecord {
  std::string file;
  std::string error;  // nonempty when the file failed to process
  std::int64_t order = 0;
  std::optional<std::int64_t> alpha2;
  bool hit = false;  // alpha2 == 1 and |G'| >= p^2
  std::optional<bool> k_in_frattini;
  std::string matched;  // catalog "id params" or "unmatched"; empty if no hit
  std::string fingerprint;
  std::string skip_reason;
};

struct ScanReport {
  std::vector<ScanRecord> records;
  std::int64_t errors() const;
};

ScanReport run_scan(const std::string& directory, const Caps& caps);
std::string scan_to_text(const ScanReport& report);
std::string scan_to_json(const ScanReport& report);

}  // namespace pgroup
