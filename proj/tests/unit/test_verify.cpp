#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pgroup/verify.hpp"

using namespace pgroup;

TEST_CASE("glob matching") {
  CHECK(glob_match("thm3.6.*", "thm3.6.14"));
  CHECK(glob_match("thm3.7", "thm3.7"));
  CHECK(!glob_match("thm3.6.*", "thm3.7"));
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("thm3.?", "thm3.7"));
}

TEST_CASE("golden tuple verifications pass") {
  Caps caps;
  VerificationRecord r37 = verify_tuple("thm3.7", {}, caps);
  CHECK(r37.verdict == "pass");
  CHECK(r37.computed.order == 64);
  CHECK(r37.computed.level == 4);
  CHECK(r37.computed.alpha2 == 1);
  CHECK(r37.computed.k_in_frattini == true);
  CHECK(r37.computed.k_iso_label == "D8 x C2");

  VerificationRecord r1 = verify_tuple("thm3.6.1", {{"p", "2"}}, caps);
  CHECK(r1.verdict == "pass");
  CHECK(r1.computed.order == 32);
  CHECK(r1.computed.level == 3);
  CHECK(r1.computed.k_in_frattini == false);

  VerificationRecord rm = verify_tuple("mp-nm", {{"p", "3"}, {"n", "2"}, {"m", "1"}}, caps);
  CHECK(rm.verdict == "pass");
  CHECK(rm.computed.level == 1);
}

TEST_CASE("a lattice cap turns into a skip, not a failure") {
  Caps caps;
  caps.lattice_cap = 16;
  VerificationRecord r = verify_tuple("thm3.6.1", {{"p", "2"}}, caps);
  CHECK(r.verdict == "skipped");
  CHECK(!r.skip_reason.empty());
}

TEST_CASE("empty grids yield one skipped record") {
  VerifyOptions opts;
  opts.entry_globs = {"thm3.6.5"};
  opts.caps.max_order = 16;  // n >= 2 forces order >= 32
  VerifyReport report = run_verify(opts);
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].verdict == "skipped");
  CHECK(report.records[0].skip_reason == "no parameters within caps");
  CHECK(report_exit_code(report) == 0);
}

TEST_CASE("canonical json reports are byte-identical across job counts") {
  VerifyOptions opts;
  opts.entry_globs = {"thm3.6.1", "thm3.6.2", "mp-nm1"};
  opts.caps.max_order = 64;
  opts.canonical = true;
  opts.format = "json";

  opts.jobs = 1;
  const std::string one = report_to_json(run_verify(opts), opts);
  opts.jobs = 4;
  const std::string four = report_to_json(run_verify(opts), opts);
  CHECK(one == four);
  opts.jobs = 1;
  CHECK(report_to_json(run_verify(opts), opts) == one);
}

TEST_CASE("analyze produces the structural report") {
  const Presentation d8 = d8_presentation();
  AnalyzeOptions opts;
  const std::string out = analyze_presentation(d8, opts);
  CHECK(out.find("order 8") != std::string::npos);
  CHECK(out.find("level: A_1") != std::string::npos);
  CHECK(out.find("alpha_1 = 1") != std::string::npos);
  CHECK(out.find("d(G) = 2") != std::string::npos);

  const std::string ab = analyze_presentation(abelian_presentation(2, {4, 2}), opts);
  CHECK(ab.find("abelian") != std::string::npos);
}

TEST_CASE("scan spots the unique-A2 groups in a directory") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pgv_scan_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto drop = [&dir](const std::string& name, const Presentation& pres) {
    std::ofstream out(dir / name);
    out << serialize(pres);
  };
  drop("d8.pgp", d8_presentation());
  drop("thm37.pgp", build_catalog("thm3.7", {}));
  drop("abelian.pgp", abelian_presentation(2, {4, 4}));
  drop("thm361.pgp", build_catalog("thm3.6.1", {{"p", "2"}}));

  Caps caps;
  ScanReport report = run_scan(dir.string(), caps);
  REQUIRE(report.records.size() == 4);
  CHECK(report.errors() == 0);

  int hits = 0;
  for (const ScanRecord& r : report.records) {
    if (r.hit) ++hits;
    if (r.file == "thm37.pgp") {
      CHECK(r.hit);
      CHECK(r.k_in_frattini == true);
      CHECK(r.matched == "thm3.7");
    }
    if (r.file == "thm361.pgp") {
      CHECK(r.hit);
      CHECK(r.k_in_frattini == false);
      CHECK(r.matched.find("thm3.6.1") == 0);
    }
    if (r.file == "d8.pgp") CHECK(!r.hit);       // |G'| = 2 < 4
    if (r.file == "abelian.pgp") CHECK(!r.hit);  // alpha2 = 0
  }
  CHECK(hits == 2);

  // empty directory: empty report
  fs::remove_all(dir);
  fs::create_directories(dir);
  ScanReport empty = run_scan(dir.string(), caps);
  CHECK(empty.records.empty());
  fs::remove_all(dir);
}

TEST_CASE("lemma suites run clean on the small corpus") {
  LemmaOptions opts;
  opts.suites = {"2.2"};
  opts.caps.max_order = 64;  // corpus restriction for speed; 2.2 builds its own instances
  const auto results = run_lemmas(opts);
  REQUIRE(results.size() == 1);
  CHECK(results[0].checks >= 20);
  CHECK(results[0].violations.empty());
}
