#pragma once

#include <cmath>
#include <optional>

#include "limitgrp/jacobian.hpp"

namespace limitgrp {

struct ProjectionOptions {
  int max_iterations = 200;
  double target_residual = 1e-13;
  double initial_damping = 1e-3;
  double max_step = 1.0;  // Frobenius cap on the update in sl2^n
  /// Sampled points must have a trusted Jacobian rank with sigma_max at least this;
  /// descent is often captured by the central points +-I, where the Jacobian collapses.
  double min_jacobian_scale = 1e-3;
  int attempts = 200;
};

namespace detail {

inline Eigen::VectorXcd relator_residual_vector(const Representation& rep) {
  const auto& rels = rep.presentation.relators();
  Eigen::VectorXcd F(static_cast<Eigen::Index>(4 * rels.size()));
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Mat2C m = evaluate(rep, rels[r]) - identity2();
    for (int k = 0; k < 4; ++k) F(static_cast<Eigen::Index>(4 * r + k)) = m(k / 2, k % 2);
  }
  return F;
}

/// Derivative of the stacked entries of ev_r - I with respect to right-trivialized
/// coordinates: d(ev_r) = (sum c Ad(ev_w) u) ev_r.
inline Eigen::MatrixXcd entry_jacobian(const Representation& rep) {
  const auto& rels = rep.presentation.relators();
  const JacobianMatrix A = fox_jacobian(rep);
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(4 * rels.size()), A.cols());
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Mat2C ev = evaluate(rep, rels[r]);
    for (Eigen::Index col = 0; col < A.cols(); ++col) {
      const auto row = static_cast<Eigen::Index>(3 * r);
      const Mat2C X = from_sl2_coords({A(row, col), A(row + 1, col), A(row + 2, col)}) * ev;
      for (int k = 0; k < 4; ++k) D(static_cast<Eigen::Index>(4 * r + k), col) = X(k / 2, k % 2);
    }
  }
  return D;
}

inline Representation apply_update(const Representation& rep, const Eigen::VectorXcd& u) {
  Representation out = rep;
  for (std::size_t i = 0; i < rep.rank(); ++i) {
    const auto b = static_cast<Eigen::Index>(3 * i);
    out.matrices[i] = exp_mat(from_sl2_coords({u(b), u(b + 1), u(b + 2)})) * rep.matrices[i];
  }
  return out;
}

}  // namespace detail

/// Damped Gauss-Newton (Levenberg-Marquardt) descent of the relator residual, moving
/// each generator by left multiplication with exp of an sl2 update so the iterate stays
/// in SL(2,C)^n. Returns nullopt when the target residual is not reached.
inline std::optional<Representation> project_to_variety(Representation rep,
                                                        const ProjectionOptions& opt = {}) {
  if (rep.presentation.relators().empty()) return rep;
  auto residual = [](const Representation& r) { return is_on_variety(r).relator; };
  double current = residual(rep);
  double lambda = opt.initial_damping;
  for (int it = 0; it < opt.max_iterations && current > opt.target_residual; ++it) {
    const Eigen::VectorXcd F = detail::relator_residual_vector(rep);
    const Eigen::MatrixXcd D = detail::entry_jacobian(rep);
    const Eigen::MatrixXcd DH = D.adjoint();
    const Eigen::MatrixXcd normal = DH * D;
    const Eigen::VectorXcd rhs = -(DH * F);
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      Eigen::MatrixXcd lhs = normal;
      lhs.diagonal().array() += lambda;
      Eigen::VectorXcd u = lhs.ldlt().solve(rhs);
      if (!u.allFinite()) {
        lambda *= 10.0;
        continue;
      }
      if (u.norm() > opt.max_step) u *= opt.max_step / u.norm();
      Representation candidate = detail::apply_update(rep, u);
      const double next = residual(candidate);
      if (next < current) {
        rep = std::move(candidate);
        current = next;
        lambda = std::max(lambda / 10.0, 1e-15);
        accepted = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!accepted) break;
  }
  if (current > opt.target_residual) return std::nullopt;
  return rep;
}

/// True when the Jacobian at rep is large enough and its rank decision trusted.
inline bool is_regular_sample(const Representation& rep, const ProjectionOptions& opt = {}) {
  if (rep.presentation.relators().empty()) return true;
  const DimensionEstimate d = local_dimension(rep);
  return d.trusted && !d.singular_values.empty() && d.singular_values.front() >= opt.min_jacobian_scale;
}

/// Seeded point of R(G): free groups sample SL(2,C)^n directly, other presentations
/// project random starts onto the relator variety until a regular point is found.
inline Representation sample_representation(const Presentation& p, Rng& rng,
                                            const ProjectionOptions& opt = {}) {
  if (p.is_free()) return sample_free_point(p, rng);
  for (int a = 0; a < opt.attempts; ++a) {
    auto rep = project_to_variety(sample_free_point(p, rng), opt);
    if (rep && is_regular_sample(*rep, opt)) return *rep;
  }
  throw CertificationError("could not sample a regular point of R(" + p.name() + ") within " +
                           std::to_string(opt.attempts) + " attempts");
}

}  // namespace limitgrp
