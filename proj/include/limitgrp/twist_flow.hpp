#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <nlohmann/json.hpp>

#include "limitgrp/neighborhood.hpp"
#include "limitgrp/splitting.hpp"

namespace limitgrp {

/// One-parameter family z -> tau_H(eta, z) of twisted representations of G.
///
/// Amalgamation: G2's generators are conjugated by exp(z log eta(e)); HNN: t is right
/// multiplied by exp(z log eta(e)). Every other generator keeps its image.
struct TwistFamily {
  LiftData lift;
  Representation base;
  StandardNeighborhood neighborhood;

  const PathDomain& domain() const { return neighborhood.path_domain; }
  const Mat2C& log_edge() const { return neighborhood.log_base; }

  /// Same branch of the logarithm around a different base point.
  TwistFamily rebased(Representation new_base) const {
    TwistFamily out = *this;
    out.base = std::move(new_base);
    return out;
  }
};

struct FamilyOptions {
  NeighborhoodOptions neighborhood;
  double on_variety_tol = 1e-8;
};

inline TwistFamily make_family(const LiftData& lift, const Representation& base, const FamilyOptions& opt = {}) {
  if (!(base.presentation == lift.splitting.assembled())) {
    throw RankMismatch("make_family: base is not a representation of the split group");
  }
  const VarietyResidual res = is_on_variety(base);
  if (res.relator > opt.on_variety_tol) {
    throw PreconditionError("make_family: base representation is off the variety (residual " +
                            std::to_string(res.relator) + ")");
  }
  const Mat2C edge_image = evaluate(base, lift.edge_element);
  return TwistFamily{lift, base, standard_neighborhood(edge_image, opt.neighborhood)};
}

/// exp(z log eta(e)) for z in the path domain.
inline Mat2C twist_factor(const TwistFamily& fam, Complex z) {
  if (!fam.domain().contains(z)) {
    throw DomainError("eval_family: z is outside the path domain (distance " +
                      std::to_string(fam.domain().distance(z)) + ")");
  }
  return exp_mat(z * fam.log_edge());
}

inline Representation eval_family(const TwistFamily& fam, Complex z) {
  const Mat2C x = twist_factor(fam, z);
  const Mat2C xi = sl2_inverse(x);
  Representation out = fam.base;
  for (std::uint32_t i : fam.lift.splitting.moved_generators()) {
    out.matrices[i] = fam.lift.splitting.is_hnn() ? Mat2C(fam.base.matrices[i] * x) : Mat2C(x * fam.base.matrices[i] * xi);
  }
  return out;
}

struct FlowSample {
  Complex z;
  double relator_residual = 0.0;
  double edge_residual = 0.0;
  double unimodularity_residual = 0.0;
  double centralizer_residual = 0.0;
};

struct FlowReport {
  std::vector<FlowSample> rows;
  double max_relator = 0.0;
  double max_edge = 0.0;
  double max_unimodularity = 0.0;
  double max_centralizer = 0.0;
  bool passed = true;
};

struct FlowOptions {
  int grid_points = 64;    // equispaced on [0, 1]
  int jitter_points = 36;  // complex points within epsilon/2 of [0, 1]
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

/// Deterministic sample of the path domain: grid on [0,1] then jittered complex points.
inline std::vector<Complex> sample_path_domain(const PathDomain& dom, int grid, int jitter, std::uint64_t seed) {
  std::vector<Complex> zs;
  for (int k = 0; k < grid; ++k) zs.emplace_back(grid > 1 ? static_cast<double>(k) / (grid - 1) : 0.0, 0.0);
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < jitter; ++k) {
    const double s = unit(rng);
    const double r = 0.5 * dom.epsilon * unit(rng);
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    zs.push_back(Complex(s, 0.0) + std::polar(r, phi));
  }
  return zs;
}

/// Samples the path domain and measures how far the twisted representations drift
/// from R(G): factor relators, edge matching, unimodularity, and the centralizer
/// identity X eta(g) X^-1 = eta(g) for every edge word g on the twist side.
inline FlowReport verify_flow(const TwistFamily& fam, const FlowOptions& opt = {}) {
  const OneEdgedSplitting& s = fam.lift.splitting;
  const auto& rels = s.assembled().relators();
  const auto pairs = s.edge_pairs();
  std::vector<Word> edge_words;
  for (const Word& g : s.twist_side_edge()) edge_words.push_back(s.embed_twist_side(g));

  FlowReport out;
  for (Complex z : sample_path_domain(fam.domain(), opt.grid_points, opt.jitter_points, opt.seed)) {
    const Representation rho = eval_family(fam, z);
    FlowSample row{z};
    for (std::size_t r = 0; r < s.factor_relator_count(); ++r) {
      row.relator_residual = std::max(row.relator_residual, (evaluate(rho, rels[r]) - identity2()).norm());
    }
    for (const auto& [u, v] : pairs) {
      row.edge_residual = std::max(row.edge_residual, (evaluate(rho, u) - evaluate(rho, v)).norm());
    }
    for (const Mat2C& m : rho.matrices) {
      row.unimodularity_residual = std::max(row.unimodularity_residual, std::abs(det(m) - 1.0));
    }
    const Mat2C x = twist_factor(fam, z);
    const Mat2C xi = sl2_inverse(x);
    for (const Word& g : edge_words) {
      const Mat2C eg = evaluate(fam.base, g);
      row.centralizer_residual = std::max(row.centralizer_residual, (x * eg * xi - eg).norm());
    }
    out.max_relator = std::max(out.max_relator, row.relator_residual);
    out.max_edge = std::max(out.max_edge, row.edge_residual);
    out.max_unimodularity = std::max(out.max_unimodularity, row.unimodularity_residual);
    out.max_centralizer = std::max(out.max_centralizer, row.centralizer_residual);
    out.rows.push_back(row);
  }
  out.passed = out.max_relator <= opt.tol && out.max_edge <= opt.tol && out.max_unimodularity <= opt.tol;
  return out;
}

inline nlohmann::json flow_report_to_json(const FlowReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : r.rows) {
    rows.push_back({{"z", {s.z.real(), s.z.imag()}},
                    {"relator_residual", s.relator_residual},
                    {"edge_residual", s.edge_residual},
                    {"unimodularity_residual", s.unimodularity_residual},
                    {"centralizer_residual", s.centralizer_residual}});
  }
  return {{"rows", std::move(rows)},
          {"summary",
           {{"max_relator_residual", r.max_relator},
            {"max_edge_residual", r.max_edge},
            {"max_unimodularity_residual", r.max_unimodularity},
            {"max_centralizer_residual", r.max_centralizer},
            {"passed", r.passed}}}};
}

}  // namespace limitgrp
