#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/SVD>

#include "limitgrp/fox.hpp"
#include "limitgrp/representation.hpp"

namespace limitgrp {

using JacobianMatrix = Eigen::MatrixXcd;

namespace detail {

/// Blocks sum_{(c,w) in dr/dx_i} c Ad(ev_w) for every relator r and generator i, as one
/// (3 * #relators) x (3 * rank) matrix.
inline JacobianMatrix fox_jacobian(const Representation& rep) {
  const auto& rels = rep.presentation.relators();
  const std::size_t n = rep.rank();
  JacobianMatrix J = JacobianMatrix::Zero(static_cast<Eigen::Index>(3 * rels.size()),
                                          static_cast<Eigen::Index>(3 * n));
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const GroupRingElement d = fox_derivative(rels[r], i);
      if (d.is_zero()) continue;
      Eigen::Matrix3cd block = Eigen::Matrix3cd::Zero();
      for (const auto& term : d.terms()) {
        block += static_cast<double>(term.coefficient) * adjoint(evaluate(rep, term.word));
      }
      J.block<3, 3>(static_cast<Eigen::Index>(3 * r), static_cast<Eigen::Index>(3 * i)) = block;
    }
  }
  return J;
}

}  // namespace detail

/// Differential of rho -> (ev_r(rho))_r in right-trivialized coordinates: a tangent vector
/// (u_1..u_n) in sl2^n moves rho_i to exp(t u_i) rho_i, and row block r holds the sl2
/// coordinates of d(ev_r) ev_r^-1. Throws PreconditionError off the variety.
inline JacobianMatrix relator_jacobian(const Representation& rep, double on_variety_tol = 1e-8) {
  const VarietyResidual res = is_on_variety(rep);
  if (res.relator > on_variety_tol) {
    throw PreconditionError("relator_jacobian: point is off the variety (residual " +
                            std::to_string(res.relator) + ")");
  }
  return detail::fox_jacobian(rep);
}

struct DimensionEstimate {
  Representation point;
  std::size_t jacobian_rank = 0;
  std::size_t local_dim = 0;
  std::vector<double> singular_values;
  double rank_gap = std::numeric_limits<double>::infinity();
  bool trusted = true;
};

struct RankOptions {
  double tol = 1e-8;       // singular values <= tol * sigma_max are dropped
  double min_gap = 1e3;    // smallest kept / largest dropped needed for trust
  double zero_floor = 1e-12;
};

/// Numeric rank decision shared by local_dimension and the reports.
struct RankDecision {
  std::size_t rank = 0;
  double gap = std::numeric_limits<double>::infinity();
  bool trusted = true;
};

inline RankDecision decide_rank(const std::vector<double>& sv, const RankOptions& opt) {
  RankDecision d;
  if (sv.empty()) return d;
  const double smax = sv.front();
  if (smax <= opt.zero_floor) {
    // all-zero Jacobian with relators present: a singular point, never trusted
    d.gap = 0.0;
    d.trusted = false;
    return d;
  }
  while (d.rank < sv.size() && sv[d.rank] > opt.tol * smax) ++d.rank;
  if (d.rank < sv.size() && sv[d.rank] > 0.0) d.gap = sv[d.rank - 1] / sv[d.rank];
  d.trusted = d.gap >= opt.min_gap;
  return d;
}

inline std::vector<double> singular_values(const JacobianMatrix& J) {
  std::vector<double> out;
  if (J.rows() == 0 || J.cols() == 0) return out;
  Eigen::JacobiSVD<JacobianMatrix> svd(J);
  const auto& s = svd.singularValues();
  out.assign(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// 3 * rank - numeric rank of the relator Jacobian at rep.
inline DimensionEstimate local_dimension(const Representation& rep, const RankOptions& opt = {}) {
  DimensionEstimate est;
  est.point = rep;
  const std::size_t full = 3 * rep.rank();
  if (rep.presentation.relators().empty()) {
    est.local_dim = full;
    return est;
  }
  est.singular_values = singular_values(relator_jacobian(rep));
  const RankDecision d = decide_rank(est.singular_values, opt);
  est.jacobian_rank = d.rank;
  est.local_dim = full - d.rank;
  est.rank_gap = d.gap;
  est.trusted = d.trusted;
  return est;
}

inline nlohmann::json dimension_to_json(const DimensionEstimate& e) {
  nlohmann::json j;
  j["jacobian_rank"] = e.jacobian_rank;
  j["local_dim"] = e.local_dim;
  j["singular_values"] = e.singular_values;
  if (std::isfinite(e.rank_gap)) {
    j["rank_gap"] = e.rank_gap;
  } else {
    j["rank_gap"] = "inf";
  }
  j["trusted"] = e.trusted;
  return j;
}

}  // namespace limitgrp
