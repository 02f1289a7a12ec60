#pragma once

// The end-to-end checks run by `limitgrp selftest` and by the acceptance binary. Every
// check reads the embedded fixture catalog and is seeded, so the JSON report depends only
// on the seed. Wall-clock limits are enforced by the callers, not recorded here.

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "limitgrp/catalog.hpp"
#include "limitgrp/pipeline.hpp"
#include "limitgrp/testing/oracles.hpp"

namespace limitgrp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  double time_limit_seconds = 0.0;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

namespace detail {

inline Presentation catalog_group(const std::string& file, const std::string& name) {
  const PresentationDocument doc = parse_presentation_document(catalog_file(file));
  const Presentation* p = doc.find(name);
  if (!p) throw Error("catalog file " + file + " has no group " + name);
  return *p;
}

inline std::vector<ParsedSplitting> catalog_splittings(const std::string& file) {
  const PresentationDocument doc = parse_presentation_document(catalog_file(file));
  std::vector<ParsedSplitting> out;
  for (const SplitStanza& st : doc.splits) out.push_back(splitting_from_stanza(doc, st));
  return out;
}

inline const std::vector<std::string>& splitting_fixtures() {
  static const std::vector<std::string> files{"splittings/z2-hnn.split", "splittings/amalgam.split"};
  return files;
}

inline CriterionResult exp_log_criterion(std::uint64_t seed) {
  Rng rng = stage_rng(seed, 0xe1, 0);
  double worst_roundtrip = 0.0;
  int drawn = 0, kept = 0;
  while (kept < 1000) {
    ++drawn;
    const Mat2C g = sample_sl2(rng);
    if (trace_gap(g) <= 1e-3) continue;
    ++kept;
    worst_roundtrip = std::max(worst_roundtrip, (exp_mat(log_mat(g)) - g).norm());
  }
  double worst_series = 0.0;
  for (int k = 0; k < 1000; ++k) {
    Mat2C v = sample_sl2_algebra(rng);
    if (v.norm() > 3.0) v *= 3.0 / v.norm();
    worst_series = std::max(worst_series, (exp_mat(v) - testing::exp_series(v)).norm());
  }
  const bool ok = worst_roundtrip < 1e-9 && worst_series < 1e-10;
  return {1, "exp/log round trip", ok,
          {{"samples", kept}, {"drawn", drawn}, {"max_roundtrip_error", worst_roundtrip},
           {"max_series_error", worst_series}}};
}

inline CriterionResult jacobian_criterion(std::uint64_t seed) {
  std::vector<Presentation> groups{catalog_group("groups/free.grp", "F2"), catalog_group("groups/free.grp", "F3"),
                                   catalog_group("groups/abelian.grp", "Z2"),
                                   catalog_group("groups/abelian.grp", "Z3")};
  for (const auto& file : splitting_fixtures()) {
    for (const auto& ps : catalog_splittings(file)) groups.push_back(ps.splitting.assembled());
  }
  Rng rng = stage_rng(seed, 0xfd, 0);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Representation rep = sample_representation(groups[k % groups.size()], rng);
    const JacobianMatrix J = relator_jacobian(rep);
    const Eigen::MatrixXcd fd = testing::finite_difference_jacobian(rep);
    worst = std::max(worst, (J - fd).norm() / std::max(1.0, J.norm()));
  }
  return {2, "Fox Jacobian matches finite differences", worst <= 1e-5,
          {{"points", 50}, {"groups", groups.size()}, {"max_relative_error", worst}}};
}

inline CriterionResult dimension_criterion(std::uint64_t seed) {
  Rng rng = stage_rng(seed, 0xd1, 0);
  bool ok = true;
  nlohmann::json free_dims = nlohmann::json::array();
  for (int n = 1; n <= 5; ++n) {
    const Presentation p = catalog_group("groups/free.grp", "F" + std::to_string(n));
    const DimensionEstimate e = local_dimension(sample_free_point(p, rng));
    ok = ok && e.trusted && e.local_dim == static_cast<std::size_t>(3 * n);
    free_dims.push_back(e.local_dim);
  }
  const Presentation z2 = catalog_group("groups/abelian.grp", "Z2");
  nlohmann::json z2_dims = nlohmann::json::array();
  for (int k = 0; k < 20; ++k) {
    const Representation rep{z2, testing::commuting_family(2, rng)};
    const DimensionEstimate e = local_dimension(rep);
    const std::size_t oracle = 6 - testing::numeric_rank(testing::finite_difference_jacobian(rep));
    ok = ok && e.trusted && e.local_dim == 4 && oracle == 4;
    z2_dims.push_back(e.local_dim);
  }
  return {3, "local dimension of free and Z^2 varieties", ok, {{"free", free_dims}, {"z2", z2_dims}}};
}

inline CriterionResult flow_criterion(std::uint64_t seed) {
  bool ok = true;
  nlohmann::json fixtures = nlohmann::json::array();
  for (const auto& file : splitting_fixtures()) {
    for (const auto& ps : catalog_splittings(file)) {
      TwistCheckOptions opt;
      opt.seed = seed;
      opt.representations = 5;
      const Verdict v = check_twist(ps, opt);
      bool flows_ok = true;
      for (const auto& f : v.report["flows"]) flows_ok = flows_ok && f.value("passed", false);
      ok = ok && flows_ok;
      fixtures.push_back({{"file", file},
                          {"max_flow_residual", v.report["max_flow_residual"]},
                          {"max_endpoint_residual", v.report["max_endpoint_residual"]},
                          {"passed", flows_ok}});
    }
  }
  return {4, "twist families stay on the variety", ok, {{"fixtures", fixtures}}};
}

/// Spoils the lifted twist on the moved generators: t -> t e^2, or conjugation by e^2.
inline LiftData corrupted_lift(LiftData l) {
  const Word e2 = power(l.lifted_edge_element, 2);
  for (std::uint32_t i : l.splitting.moved_generators()) {
    const Word x = l.lifted_group.generator(i);
    l.lifted_twist.images[i] = l.splitting.is_hnn() ? x * e2 : conjugate(x, e2);
  }
  return l;
}

inline CriterionResult diagram_criterion(std::uint64_t seed) {
  bool ok = true;
  nlohmann::json fixtures = nlohmann::json::array();
  for (const auto& file : splitting_fixtures()) {
    for (const auto& ps : catalog_splittings(file)) {
      const LiftData l = lift(ps.splitting, ps.twist.value_or(ps.splitting.twist_side().identity()));
      Rng rng = stage_rng(seed, 0xd1a9, fixtures.size());
      std::vector<Representation> reps;
      for (int k = 0; k < 20; ++k) reps.push_back(sample_representation(ps.splitting.assembled(), rng));
      const DiagramReport good = check_diagram(l, reps, 1e-8);
      const DiagramReport bad = check_diagram(corrupted_lift(l), reps, 1e-8);
      const bool fixture_ok = good.passed && good.max_residual < 1e-8 && bad.max_residual > 1e-3;
      ok = ok && fixture_ok;
      fixtures.push_back({{"file", file},
                          {"max_residual", good.max_residual},
                          {"corrupted_max_residual", bad.max_residual},
                          {"passed", fixture_ok}});
    }
  }
  return {5, "lift commutes with the twist", ok, {{"fixtures", fixtures}}};
}

inline CriterionResult resolution_criterion(std::uint64_t seed) {
  struct Case {
    std::string file;
    std::vector<std::size_t> expected;  // empty: must be rejected
  };
  const std::vector<Case> cases{{"resolutions/f2-z2-z.json", {6, 4, 3}},
                                {"resolutions/f3-z3-z2-z.json", {9, 5, 4, 3}},
                                {"resolutions/bad-witness.json", {}},
                                {"resolutions/missing-witness.json", {}},
                                {"resolutions/corrupted-map.json", {}},
                                {"resolutions/bad-relator.json", {}},
                                {"resolutions/identity.json", {}}};
  bool ok = true;
  nlohmann::json results = nlohmann::json::array();
  for (const Case& c : cases) {
    HarnessOptions opt;
    opt.seed = seed;
    const Verdict v = verify_resolution(parse_resolution(catalog_file(c.file)), opt);
    std::vector<nlohmann::json> dims;
    for (const auto& st : v.report["stages"]) dims.push_back(st["dimension"]);
    bool case_ok;
    if (c.expected.empty()) {
      case_ok = !v.passed;
    } else {
      bool match = dims.size() == c.expected.size();
      for (std::size_t i = 0; match && i < dims.size(); ++i) match = dims[i] == nlohmann::json(c.expected[i]);
      case_ok = v.passed && match && v.report["bound"]["holds"].get<bool>();
    }
    ok = ok && case_ok;
    results.push_back({{"file", c.file},
                       {"dimensions", dims},
                       {"exit_code", v.passed ? 0 : 1},
                       {"expected_exit_code", c.expected.empty() ? 1 : 0},
                       {"passed", case_ok}});
  }
  return {6, "resolution length bound", ok, {{"cases", results}}};
}

inline CriterionResult lattice_criterion(std::uint64_t) {
  const std::vector<std::pair<std::string, bool>> cases{
      {"lattices/free.json", true},   {"lattices/abelian.json", true}, {"lattices/two-level.json", true},
      {"lattices/depth3.json", true}, {"lattices/depth3.txt", true},   {"lattices/adversarial.json", false}};
  bool ok = true;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& [file, expect_pass] : cases) {
    const Verdict v = lattice_height(parse_lattice(catalog_file(file)));
    const bool case_ok = v.passed == expect_pass;
    ok = ok && case_ok;
    results.push_back({{"file", file},
                       {"height", v.report["height"]},
                       {"rank_bound", v.report["rank_bound"]},
                       {"flagged", !v.passed},
                       {"passed", case_ok}});
  }
  return {7, "analysis lattice height bound", ok, {{"cases", results}}};
}

}  // namespace detail

/// Criteria 1-7; determinism of the report itself is checked by running it twice.
inline const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {1, "exp/log round trip", 5.0, detail::exp_log_criterion},
      {2, "Fox Jacobian matches finite differences", 30.0, detail::jacobian_criterion},
      {3, "local dimension of free and Z^2 varieties", 0.0, detail::dimension_criterion},
      {4, "twist families stay on the variety", 0.0, detail::flow_criterion},
      {5, "lift commutes with the twist", 0.0, detail::diagram_criterion},
      {6, "resolution length bound", 60.0, detail::resolution_criterion},
      {7, "analysis lattice height bound", 0.0, detail::lattice_criterion}};
  return all;
}

inline CriterionResult run_criterion(const Criterion& c, std::uint64_t seed) {
  try {
    return c.run(seed);
  } catch (const std::exception& e) {
    return {c.id, c.name, false, {{"error", e.what()}}};
  }
}

inline nlohmann::json selftest_report(std::uint64_t seed) {
  nlohmann::json criteria = nlohmann::json::array();
  bool all = true;
  for (const Criterion& c : acceptance_criteria()) {
    const CriterionResult r = run_criterion(c, seed);
    all = all && r.passed;
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"schema_version", 1}, {"seed", seed}, {"criteria", std::move(criteria)}, {"passed", all}};
}

}  // namespace limitgrp
