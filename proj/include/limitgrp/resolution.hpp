#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "limitgrp/folding.hpp"
#include "limitgrp/jacobian.hpp"
#include "limitgrp/sampler.hpp"
#include "limitgrp/text_format.hpp"

namespace limitgrp {

/// A sequence of epimorphisms L_1 -> L_2 -> ... -> L_k with one kernel witness per map.
///
/// Strictness of the maps is an assumption of the caller; the harness only checks its
/// testable consequences (properness, relator compatibility, dimension decrease).
struct ResolutionDescriptor {
  std::string name;
  std::vector<Presentation> stages;
  std::vector<GroupMap> maps;                     // maps[i]: stages[i] -> stages[i+1]
  std::vector<std::optional<Word>> witnesses;     // one per map; nullopt when missing
  std::optional<std::size_t> terminal_rank;       // m, when L_k is claimed free
  std::optional<GroupMap> terminal_iso;           // L_k -> F_m, when L_k has relators

  std::size_t length() const { return maps.size(); }
};

namespace detail {

inline Presentation presentation_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_presentation(j.get<std::string>());
  if (!j.is_object()) throw Error("stage must be presentation text or an object");
  std::vector<std::string> gens = j.at("gens").get<std::vector<std::string>>();
  std::vector<Word> rels;
  if (j.contains("rels")) {
    for (const auto& r : j["rels"]) {
      Word w = parse_word(r.get<std::string>(), gens);
      if (w.empty()) throw Error("relator '" + r.get<std::string>() + "' reduces to the identity");
      rels.push_back(std::move(w));
    }
  }
  return Presentation(j.value("name", std::string("L")), std::move(gens), std::move(rels));
}

inline std::vector<Word> images_from_json(const nlohmann::json& j, const Presentation& target) {
  std::vector<Word> out;
  for (const auto& s : j.at("images")) out.push_back(parse_word(s.get<std::string>(), target.generator_names()));
  return out;
}

}  // namespace detail

inline ResolutionDescriptor resolution_from_json(const nlohmann::json& j) {
  try {
    ResolutionDescriptor d;
    d.name = j.value("name", std::string("resolution"));
    for (const auto& s : j.at("stages")) d.stages.push_back(detail::presentation_from_json(s));
    if (d.stages.empty()) throw Error("resolution needs at least one stage");
    const auto& maps = j.contains("maps") ? j["maps"] : nlohmann::json::array();
    if (maps.size() + 1 != d.stages.size()) {
      throw Error("resolution has " + std::to_string(d.stages.size()) + " stages but " +
                  std::to_string(maps.size()) + " maps");
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
      d.maps.emplace_back(d.stages[i], d.stages[i + 1], detail::images_from_json(maps[i], d.stages[i + 1]));
    }
    const auto& ws = j.contains("witnesses") ? j["witnesses"] : nlohmann::json::array();
    if (ws.size() > d.maps.size()) throw Error("more witnesses than maps");
    for (std::size_t i = 0; i < d.maps.size(); ++i) {
      if (i < ws.size() && !ws[i].is_null()) {
        d.witnesses.push_back(parse_word(ws[i].get<std::string>(), d.stages[i].generator_names()));
      } else {
        d.witnesses.push_back(std::nullopt);
      }
    }
    if (j.contains("terminal_rank") && !j["terminal_rank"].is_null()) {
      d.terminal_rank = j["terminal_rank"].get<std::size_t>();
    }
    if (j.contains("terminal_iso")) {
      const auto& iso = j["terminal_iso"];
      std::vector<std::string> gens = iso.at("gens").get<std::vector<std::string>>();
      Presentation free_target("F" + std::to_string(gens.size()), gens);
      d.terminal_iso = GroupMap(d.stages.back(), free_target, detail::images_from_json(iso, free_target));
      if (d.terminal_rank && *d.terminal_rank != gens.size()) throw Error("terminal_iso rank differs from terminal_rank");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("resolution JSON: ") + e.what());
  }
}

inline ResolutionDescriptor parse_resolution(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("resolution JSON: ") + e.what());
  }
  return resolution_from_json(j);
}

struct HarnessOptions {
  std::uint64_t seed = 7;
  int certification_samples = 20;
  int samples_per_stage = 20;
  double tol = 1e-8;                       // numeric triviality of words
  double survival_threshold = 1e-4;        // ||ev_w - I|| needed to call w nontrivial
  double delta = kDefaultDegeneracyThreshold;
  std::size_t ball_radius = 3;             // nondegeneracy screen on the terminus
  RankOptions rank;
};

/// Terminal group certified free: either relator-free, or an explicit surjection onto
/// F_m killing every relator. Injectivity of that surjection is taken on trust.
struct TerminalCertificate {
  bool certified_free = false;
  std::size_t rank = 0;          // m
  GroupMap to_free;              // L_k -> F_m
  std::string detail;
};

inline TerminalCertificate certify_terminal(const ResolutionDescriptor& d) {
  TerminalCertificate t;
  const Presentation& last = d.stages.back();
  if (d.terminal_iso) {
    const GroupMap& iso = *d.terminal_iso;
    bool kills = true;
    for (const Word& r : last.relators()) kills = kills && iso(r).empty();
    const bool onto = generates_free_group(iso.images, iso.target.rank());
    t.certified_free = kills && onto;
    t.rank = iso.target.rank();
    t.to_free = iso;
    t.detail = !kills ? "terminal_iso does not kill every relator"
                      : (!onto ? "terminal_iso images do not generate the free group" : "certified by terminal_iso");
    return t;
  }
  if (last.is_free()) {
    t.rank = last.rank();
    t.to_free = GroupMap::identity(last);
    t.certified_free = !d.terminal_rank || *d.terminal_rank == last.rank();
    t.detail = t.certified_free ? "terminal stage has no relators" : "terminal_rank differs from the terminal stage rank";
    return t;
  }
  t.detail = "terminal stage has relators and no terminal_iso";
  return t;
}

struct MapCertificate {
  std::size_t index = 0;
  bool witness_present = false;
  bool witness_dies = false;         // f(w) trivial in the target
  bool witness_survives = false;     // w nontrivial on some seeded source representation
  double witness_target_residual = 0.0;
  double witness_source_norm = 0.0;
  bool relators_compatible = true;   // f(r) trivial in the target for every source relator
  double relator_residual = 0.0;
  std::optional<bool> surjective_onto_terminus;
  std::vector<std::string> warnings;
  bool certified = false;
};

struct CertificationReport {
  TerminalCertificate terminal;
  std::vector<MapCertificate> maps;
  bool certified = false;
};

namespace detail {

inline Rng stage_rng(std::uint64_t seed, std::uint64_t salt, std::size_t index) {
  std::seed_seq seq{seed, salt, static_cast<std::uint64_t>(index)};
  return Rng(seq);
}

/// Largest ||ev_w - I|| over the given points, 0 for symbolically trivial w.
inline double word_deviation(const Word& w, std::span<const Representation> reps) {
  if (w.empty()) return 0.0;
  double worst = 0.0;
  for (const Representation& r : reps) worst = std::max(worst, (evaluate(r, w) - identity2()).norm());
  return worst;
}

}  // namespace detail

/// Composite L_i -> F_m through the remaining maps and the terminal certificate.
inline GroupMap map_to_terminus(const ResolutionDescriptor& d, const TerminalCertificate& t, std::size_t stage) {
  GroupMap out = t.to_free;
  for (std::size_t i = d.maps.size(); i-- > stage;) out = compose(out, d.maps[i]);
  return out;
}

/// Composite L_i -> L_k.
inline GroupMap map_to_last_stage(const ResolutionDescriptor& d, std::size_t stage) {
  GroupMap out = GroupMap::identity(d.stages.back());
  for (std::size_t i = d.maps.size(); i-- > stage;) out = compose(out, d.maps[i]);
  return out;
}

inline CertificationReport certify_resolution(const ResolutionDescriptor& d, const HarnessOptions& opt = {}) {
  CertificationReport rep;
  rep.terminal = certify_terminal(d);
  rep.certified = rep.terminal.certified_free || !d.terminal_rank;
  for (std::size_t i = 0; i < d.maps.size(); ++i) {
    const GroupMap& f = d.maps[i];
    MapCertificate mc;
    mc.index = i;

    Rng target_rng = detail::stage_rng(opt.seed, 0x7a46e7, i);
    Rng source_rng = detail::stage_rng(opt.seed, 0x50c7ce, i);
    std::vector<Representation> target_reps, source_reps;
    for (int k = 0; k < opt.certification_samples; ++k) {
      target_reps.push_back(sample_representation(f.target, target_rng));
      source_reps.push_back(sample_representation(f.source, source_rng));
    }

    for (const Word& r : f.source.relators()) {
      mc.relator_residual = std::max(mc.relator_residual, detail::word_deviation(f(r), target_reps));
    }
    mc.relators_compatible = mc.relator_residual <= opt.tol;

    if (d.witnesses[i]) {
      const Word& w = *d.witnesses[i];
      mc.witness_present = true;
      mc.witness_target_residual = detail::word_deviation(f(w), target_reps);
      mc.witness_dies = mc.witness_target_residual <= opt.tol;
      mc.witness_source_norm = detail::word_deviation(w, source_reps);
      mc.witness_survives = mc.witness_source_norm > opt.survival_threshold;
      if (!mc.witness_survives) mc.warnings.push_back("witness-vacuous: trivial on every seeded source representation");
      if (!mc.witness_dies) mc.warnings.push_back("properness-uncertified: witness survives in the target");
    } else {
      mc.warnings.push_back("properness-uncertified: no kernel witness");
    }

    if (rep.terminal.certified_free) {
      const GroupMap to_free = map_to_terminus(d, rep.terminal, i);
      mc.surjective_onto_terminus = generates_free_group(to_free.images, rep.terminal.rank);
      if (!*mc.surjective_onto_terminus) mc.warnings.push_back("composite map does not reach the free terminus");
    }

    mc.certified = mc.witness_present && mc.witness_dies && mc.witness_survives && mc.relators_compatible &&
                   mc.surjective_onto_terminus.value_or(true);
    rep.certified = rep.certified && mc.certified;
    rep.maps.push_back(std::move(mc));
  }
  return rep;
}

struct StageReport {
  std::size_t index = 0;
  std::string name;
  std::size_t rank = 0;
  std::optional<std::size_t> dimension;  // d_i: max trusted local dimension
  bool exact = false;                    // d_k = 3m for a certified free terminus
  std::size_t trusted_samples = 0;
  std::size_t off_variety = 0;  // pulled-back points that miss R(L_i)
  std::vector<DimensionEstimate> samples;
};

struct ResolutionReport {
  std::string name;
  std::uint64_t seed = 0;
  CertificationReport certification;
  std::vector<StageReport> stages;
  std::vector<bool> strict_decrease;
  std::size_t k = 0;  // number of maps
  std::size_t n = 0;  // rank of the first stage
  std::optional<std::size_t> m;
  std::size_t bound = 0;
  bool bound_holds = false;
  std::optional<std::string> caveat;
  bool passed = false;
};

/// Samples nondegenerate points of the free terminus, pulls them back to every stage and
/// records the largest trusted local dimension there; then checks d_{i+1} < d_i and
/// k <= 3(n - m). A stage without trusted samples is inconclusive and fails the report.
inline ResolutionReport dimension_sequence(const ResolutionDescriptor& d, const HarnessOptions& opt = {}) {
  ResolutionReport out;
  out.name = d.name;
  out.seed = opt.seed;
  out.certification = certify_resolution(d, opt);
  out.k = d.length();
  out.n = d.stages.front().rank();
  const TerminalCertificate& term = out.certification.terminal;

  std::vector<Representation> terminal_points;
  Rng rng = detail::stage_rng(opt.seed, 0xd1e5, 0);
  if (term.certified_free) {
    out.m = term.rank;
    const Presentation free_m = term.to_free.target;
    const std::vector<Word> ball = word_ball(free_m.rank(), opt.ball_radius);
    for (int attempt = 0; static_cast<int>(terminal_points.size()) < opt.samples_per_stage &&
                          attempt < 50 * opt.samples_per_stage;
         ++attempt) {
      Representation p = sample_free_point(free_m, rng);
      if (screen_nondegenerate(p, ball, opt.delta)) terminal_points.push_back(std::move(p));
    }
  } else {
    // no free anchor: sample the terminal stage directly
    for (int s = 0; s < opt.samples_per_stage; ++s) terminal_points.push_back(sample_representation(d.stages.back(), rng));
    out.caveat = "terminal stage not certified free: d_k is an estimate (true d_k >= estimate) and only k <= 3n is checked";
  }

  for (std::size_t i = 0; i < d.stages.size(); ++i) {
    StageReport st;
    st.index = i;
    st.name = d.stages[i].name();
    st.rank = d.stages[i].rank();
    const GroupMap down = term.certified_free ? map_to_terminus(d, term, i) : map_to_last_stage(d, i);
    if (term.certified_free && i + 1 == d.stages.size()) {
      st.dimension = 3 * term.rank;
      st.exact = true;
    } else {
      for (const Representation& p : terminal_points) {
        Representation q = pullback(down, p);
        if (!is_on_variety(q).within(opt.tol)) {
          // the composite does not respect the relators of this stage
          ++st.off_variety;
          continue;
        }
        DimensionEstimate e = local_dimension(q, opt.rank);
        if (e.trusted) {
          ++st.trusted_samples;
          st.dimension = std::max(st.dimension.value_or(0), e.local_dim);
        }
        st.samples.push_back(std::move(e));
      }
    }
    out.stages.push_back(std::move(st));
  }

  bool all_strict = true;
  for (std::size_t i = 0; i + 1 < out.stages.size(); ++i) {
    const auto& a = out.stages[i].dimension;
    const auto& b = out.stages[i + 1].dimension;
    const bool strict = a && b && *b < *a;
    out.strict_decrease.push_back(strict);
    all_strict = all_strict && strict;
  }
  const bool conclusive = std::all_of(out.stages.begin(), out.stages.end(), [](const StageReport& s) {
    return s.dimension.has_value() && s.off_variety == 0;
  });
  if (out.m) {
    out.bound = out.n >= *out.m ? 3 * (out.n - *out.m) : 0;
    out.bound_holds = out.n >= *out.m && out.k <= out.bound;
  } else {
    out.bound = 3 * out.n;
    out.bound_holds = out.k <= out.bound;
  }
  out.passed = out.certification.certified && conclusive && all_strict && out.bound_holds;
  return out;
}

inline nlohmann::json resolution_report_to_json(const ResolutionReport& r, const ResolutionDescriptor& d) {
  using nlohmann::json;
  json maps = json::array();
  for (const auto& mc : r.certification.maps) {
    json m{{"index", mc.index},
           {"witness", d.witnesses[mc.index] ? json(format_word(*d.witnesses[mc.index], d.stages[mc.index])) : json()},
           {"witness_dies", mc.witness_dies},
           {"witness_target_residual", mc.witness_target_residual},
           {"witness_survives", mc.witness_survives},
           {"witness_source_norm", mc.witness_source_norm},
           {"relators_compatible", mc.relators_compatible},
           {"relator_residual", mc.relator_residual},
           {"surjective_onto_terminus", mc.surjective_onto_terminus ? json(*mc.surjective_onto_terminus) : json()},
           {"warnings", mc.warnings},
           {"certified", mc.certified}};
    maps.push_back(std::move(m));
  }
  json stages = json::array();
  for (const auto& st : r.stages) {
    json samples = json::array();
    for (const auto& e : st.samples) samples.push_back(dimension_to_json(e));
    stages.push_back({{"index", st.index},
                      {"name", st.name},
                      {"rank", st.rank},
                      {"dimension", st.dimension ? json(*st.dimension) : json()},
                      {"exact", st.exact},
                      {"conclusive", st.dimension.has_value()},
                      {"trusted_samples", st.trusted_samples},
                      {"off_variety", st.off_variety},
                      {"samples", std::move(samples)}});
  }
  json bound{{"k", r.k}, {"n", r.n}, {"m", r.m ? json(*r.m) : json()}, {"bound", r.bound}, {"holds", r.bound_holds}};
  if (r.caveat) bound["caveat"] = *r.caveat;
  return {{"schema_version", 1},
          {"name", r.name},
          {"seed", r.seed},
          {"assumptions",
           {"strictness of every map is assumed, not certified; properness and dimension decrease are checked",
            "dimensions are local Jacobian-kernel dimensions at sampled pulled-back points"}},
          {"certification",
           {{"terminal", {{"certified_free", r.certification.terminal.certified_free},
                          {"rank", r.certification.terminal.rank},
                          {"detail", r.certification.terminal.detail}}},
            {"maps", std::move(maps)},
            {"certified", r.certification.certified}}},
          {"stages", std::move(stages)},
          {"strict_decrease", r.strict_decrease},
          {"bound", std::move(bound)},
          {"passed", r.passed}};
}

}  // namespace limitgrp
