#pragma once

// Command-line front end. Exit codes: 0 every check passed, 1 a check failed,
// 2 malformed input or usage. Reports go to stdout (or --out), diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "limitgrp/acceptance.hpp"
#include "limitgrp/pipeline.hpp"

namespace limitgrp {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

namespace detail {

inline void emit_report(const nlohmann::json& report, const std::string& out_path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot write " + out_path);
  f << text;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for strict resolutions of limit groups", "limitgrp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 7;
  double delta = kDefaultDegeneracyThreshold;
  std::string out_path;
  app.add_option("--seed", seed, "seed for every random stream")->capture_default_str();
  app.add_option("--delta", delta, "degeneracy threshold on |trace + 2|")->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");

  std::string input;
  int seeds = 20, samples = 20;
  double tol = 1e-9, epsilon = 0.1;
  bool rows = false;
  std::string group_name;
  std::optional<std::size_t> rank, length;

  auto* twist = app.add_subcommand("check-twist", "lift a Dehn twist and verify its holomorphic family");
  twist->add_option("file", input, "presentation file with split lines")->required();
  twist->add_option("--seeds", seeds, "seeded base representations")->capture_default_str();
  twist->add_option("--tol", tol, "residual tolerance along the family")->capture_default_str();
  twist->add_option("--epsilon", epsilon, "initial neighborhood radius")->capture_default_str();
  twist->add_flag("--rows", rows, "include per-z residual rows");

  auto* dim = app.add_subcommand("estimate-dim", "local dimension of the representation variety");
  dim->add_option("file", input, "presentation file")->required();
  dim->add_option("--samples", samples, "seeded points")->capture_default_str();
  dim->add_option("--group", group_name, "group to use (default: first in file)");

  auto* res = app.add_subcommand("verify-resolution", "check a resolution descriptor");
  res->add_option("file", input, "resolution JSON")->required();
  res->add_option("--samples", samples, "seeded points per stage")->capture_default_str();

  auto* lat = app.add_subcommand("lattice-height", "height of an analysis lattice against 3 * rank");
  lat->add_option("file", input, "lattice (JSON or indented text)")->required();
  lat->add_option("--rank", rank, "rank of the group (overrides the file)");
  lat->add_option("--length", length, "strict resolution length k to compare against");

  auto* self = app.add_subcommand("selftest", "run the built-in acceptance checks");

  std::vector<const char*> argv;
  argv.push_back("limitgrp");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "limitgrp: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!(delta > 0.0)) {
    err << "limitgrp: --delta must be positive\n";
    return kExitInputError;
  }

  try {
    Verdict v;
    if (*twist) {
      const PresentationDocument doc = parse_presentation_document(read_text_file(input));
      if (doc.splits.empty()) throw Error(input + ": no split line");
      TwistCheckOptions opt;
      opt.seed = seed;
      opt.delta = delta;
      opt.representations = seeds;
      opt.flow_tol = tol;
      opt.epsilon = epsilon;
      opt.include_rows = rows;
      nlohmann::json all = nlohmann::json::array();
      v.passed = true;
      for (const SplitStanza& st : doc.splits) {
        const ParsedSplitting ps = splitting_from_stanza(doc, st);
        Verdict one;
        try {
          one = check_twist(ps, opt);
        } catch (const CertificationError& e) {
          one.report = {{"line", st.line}, {"error", e.what()}, {"passed", false}};
          err << "limitgrp: " << input << ":" << st.line << ": " << e.what() << "\n";
        }
        v.passed = v.passed && one.passed;
        all.push_back(std::move(one.report));
      }
      v.report = {{"schema_version", 1}, {"file", input}, {"splittings", std::move(all)}, {"passed", v.passed}};
    } else if (*dim) {
      const PresentationDocument doc = parse_presentation_document(read_text_file(input));
      if (doc.groups.empty()) throw Error(input + ": no group");
      const Presentation* p = group_name.empty() ? &doc.groups.front() : doc.find(group_name);
      if (!p) throw Error(input + ": no group named " + group_name);
      v = estimate_dimension(*p, {seed, samples, {}});
      if (!v.passed) err << "limitgrp: no trusted sample; the estimate is inconclusive\n";
    } else if (*res) {
      HarnessOptions opt;
      opt.seed = seed;
      opt.delta = delta;
      opt.samples_per_stage = samples;
      const ResolutionDescriptor d = parse_resolution(read_text_file(input));
      v = verify_resolution(d, opt);
      if (!v.passed) err << "limitgrp: resolution check failed for " << input << "\n";
    } else if (*lat) {
      AnalysisLattice l = parse_lattice(read_text_file(input));
      if (rank) l.declared_rank = *rank;
      if (l.declared_rank == 0) throw Error("lattice-height: rank unknown; pass --rank");
      v = lattice_height(l, length);
      if (!v.passed) err << "limitgrp: lattice height " << v.report["height"] << " exceeds its bound\n";
    } else if (*self) {
      v.report = selftest_report(seed);
      v.passed = v.report["passed"].get<bool>();
      for (const auto& c : v.report["criteria"]) {
        err << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["id"] << " " << c["name"].get<std::string>()
            << "\n";
      }
    }
    detail::emit_report(v.report, out_path, out);
    return v.passed ? kExitPass : kExitCheckFailed;
  } catch (const ParseError& e) {
    err << "limitgrp: " << input << ": " << e.what() << "\n";
  } catch (const Error& e) {
    err << "limitgrp: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "limitgrp: " << input << ": " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace limitgrp
