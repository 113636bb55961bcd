#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/verify.hpp"

namespace {

void add_caps_flags(CLI::App* cmd, pgroup::Caps& caps) {
  cmd->add_option("--p", caps.primes, "primes to sweep (comma separated)")->delimiter(',');
  cmd->add_option("--max-n", caps.max_n, "largest n parameter swept");
  cmd->add_option("--max-order", caps.max_order, "largest group order built");
  cmd->add_option("--lattice-cap", caps.lattice_cap,
                  "largest order for full subgroup-lattice enumeration");
  cmd->add_option("--iso-cap", caps.iso_cap, "largest order for isomorphism tests");
  cmd->add_option("--max-cosets", caps.max_cosets, "coset table row limit");
}

int emit(const std::string& text, const std::string& outfile) {
  if (outfile.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(outfile);
  if (!out) {
    std::cerr << "cannot open output file: " << outfile << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgv: finite p-group engine and verification harness"};
  app.require_subcommand(1);

  pgroup::VerifyOptions vopts;
  std::string v_out;
  auto* verify = app.add_subcommand("verify", "sweep catalog entries against their claims");
  verify->add_option("--entry", vopts.entry_globs, "entry id or glob, repeatable");
  add_caps_flags(verify, vopts.caps);
  verify->add_option("--format", vopts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--canonical", vopts.canonical, "byte-stable output, no wall times");
  verify->add_option("--jobs", vopts.jobs, "worker threads");
  verify->add_option("-o,--output", v_out, "write the report to a file");

  pgroup::AnalyzeOptions aopts;
  std::string a_file;
  auto* analyze = app.add_subcommand("analyze", "structural report for one .pgp file");
  analyze->add_option("file", a_file, "presentation file")->required();
  add_caps_flags(analyze, aopts.caps);

  pgroup::Caps scan_caps;
  std::string s_dir, s_format = "text", s_out;
  auto* scan = app.add_subcommand("scan", "scan a directory of .pgp files for unique-A2 groups");
  scan->add_option("dir", s_dir, "directory of presentation files")->required();
  add_caps_flags(scan, scan_caps);
  scan->add_option("--format", s_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  scan->add_option("-o,--output", s_out, "write the report to a file");

  pgroup::LemmaOptions lopts;
  std::string l_format = "text", l_out;
  auto* lemmas = app.add_subcommand("lemmas", "run the lemma property suites");
  lemmas->add_option("--suite", lopts.suites,
                     "suite selector (2.1 2.2 2.3 2.4 2.5 3.2 3.3 3.4 3.5 levels all)");
  add_caps_flags(lemmas, lopts.caps);
  lemmas->add_option("--format", l_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  lemmas->add_option("-o,--output", l_out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      const pgroup::VerifyReport report = pgroup::run_verify(vopts);
      const std::string text = vopts.format == "json" ? pgroup::report_to_json(report, vopts)
                                                      : pgroup::report_to_text(report, vopts);
      const int io = emit(text, v_out);
      return io != 0 ? io : pgroup::report_exit_code(report);
    }
    if (*analyze) {
      std::ifstream in(a_file);
      if (!in) {
        std::cerr << "cannot open " << a_file << "\n";
        return 2;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      const pgroup::Presentation pres = pgroup::parse_presentation(buffer.str());
      std::cout << pgroup::analyze_presentation(pres, aopts);
      return 0;
    }
    if (*scan) {
      const pgroup::ScanReport report = pgroup::run_scan(s_dir, scan_caps);
      const std::string text =
          s_format == "json" ? pgroup::scan_to_json(report) : pgroup::scan_to_text(report);
      const int io = emit(text, s_out);
      if (io != 0) return io;
      return report.errors() > 0 ? 1 : 0;
    }
    if (*lemmas) {
      const std::vector<pgroup::LemmaResult> results = pgroup::run_lemmas(lopts);
      const std::string text =
          l_format == "json" ? pgroup::lemmas_to_json(results) : pgroup::lemmas_to_text(results);
      const int io = emit(text, l_out);
      if (io != 0) return io;
      for (const pgroup::LemmaResult& r : results)
        if (!r.violations.empty()) return 1;
      return 0;
    }
  } catch (const pgroup::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pgroup::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
