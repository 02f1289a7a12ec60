#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "limitgrp/sl2c.hpp"

namespace limitgrp {

/// The epsilon-neighborhood of the real segment [0, 1] in C.
struct PathDomain {
  double epsilon = 0.1;

  double distance(Complex z) const {
    const double x = std::clamp(z.real(), 0.0, 1.0);
    return std::abs(z - Complex(x, 0.0));
  }
  bool contains(Complex z) const { return distance(z) < epsilon; }
};

struct NeighborhoodOptions {
  double epsilon = 0.1;
  double delta = kDefaultDegeneracyThreshold;
  int max_shrinks = 20;
  int spot_checks = 64;
  /// exp(z v) counts as -I when ||exp(z v) + I|| falls below this.
  double minus_identity_tol = 1e-6;
  /// Grid points whose exponentials agree within this are required to coincide.
  double injectivity_tol = 1e-9;
};

/// Certified logarithm branch around a base element: exp(log_base) = base and
/// exp(z v) avoids -I for z in the path domain and v within epsilon of [0,1] log_base.
struct StandardNeighborhood {
  Mat2C base;
  Mat2C log_base;
  double epsilon = 0.0;
  PathDomain path_domain;
  int shrinks = 0;
};

namespace detail {

inline double distance_to_nonzero_multiple_of_pi(Complex theta) {
  // exp is singular on sl2 exactly where theta is a nonzero integer multiple of pi
  const double k = std::round(theta.real() / std::numbers::pi);
  if (k == 0.0) {
    return std::min(std::abs(theta - Complex(std::numbers::pi, 0.0)),
                    std::abs(theta + Complex(std::numbers::pi, 0.0)));
  }
  return std::abs(theta - Complex(k * std::numbers::pi, 0.0));
}

/// Spot-checks the neighborhood conditions at radius eps. Deterministic: uses a fixed
/// internal stream, independent of the caller's generator.
inline bool certify_neighborhood(const Mat2C& log_base, double eps, const NeighborhoodOptions& opt) {
  // z * theta(log_base) sweeps an eps|theta|-neighborhood of the segment [0, theta]; it must
  // stay clear of +-pi, where exp hits -I. Factor 2 and the +1 absorb the v-perturbations.
  const Complex theta = std::sqrt(det(log_base));
  auto segment_distance = [&](Complex target) {
    const double tt = std::norm(theta);
    double t = tt > 0.0 ? std::clamp((std::conj(theta) * target).real() / tt, 0.0, 1.0) : 0.0;
    return std::abs(target - t * theta);
  };
  const double clearance = std::min(segment_distance(Complex(std::numbers::pi, 0.0)),
                                    segment_distance(Complex(-std::numbers::pi, 0.0)));
  if (clearance <= 2.0 * eps * (std::abs(theta) + 1.0)) return false;

  Rng rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Mat2C minus_i = -identity2();
  std::vector<Mat2C> points, images;
  for (int k = 0; k < opt.spot_checks; ++k) {
    const double s = opt.spot_checks > 1 ? static_cast<double>(k) / (opt.spot_checks - 1) : 0.0;
    Mat2C dir = sample_sl2_algebra(rng);
    dir *= eps * unit(rng) / std::max(dir.norm(), 1e-300);
    const Mat2C v = s * log_base + dir;

    const double zr = -eps + (1.0 + 2.0 * eps) * unit(rng);
    const double zi = eps * (2.0 * unit(rng) - 1.0);
    Complex z(zr, zi);
    PathDomain dom{eps};
    if (!dom.contains(z)) z = Complex(std::clamp(zr, 0.0, 1.0), zi / 2.0);
    if ((exp_mat(z * v) - minus_i).norm() < opt.minus_identity_tol) return false;

    if (v.norm() > 1e-12 &&
        distance_to_nonzero_multiple_of_pi(std::sqrt(det(v))) < opt.minus_identity_tol) {
      return false;
    }
    points.push_back(v);
    images.push_back(exp_mat(v));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if ((images[i] - images[j]).norm() < opt.injectivity_tol &&
          (points[i] - points[j]).norm() > 1e3 * opt.injectivity_tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Builds a standard neighborhood of g, halving epsilon until the spot checks pass.
inline StandardNeighborhood standard_neighborhood(const Mat2C& g, const NeighborhoodOptions& opt = {}) {
  if (!(opt.epsilon > 0.0)) throw DomainError("standard_neighborhood: epsilon must be positive");
  const Mat2C lg = log_mat(g, opt.delta);
  if (relative_distance(exp_mat(lg), g) > 1e-9) {
    throw CertificationError("standard_neighborhood: exp(log g) does not reproduce g");
  }
  double eps = opt.epsilon;
  for (int shrink = 0; shrink <= opt.max_shrinks; ++shrink) {
    if (detail::certify_neighborhood(lg, eps, opt)) {
      return StandardNeighborhood{g, lg, eps, PathDomain{eps}, shrink};
    }
    eps /= 2.0;
  }
  throw CertificationError("standard_neighborhood: could not certify after " +
                           std::to_string(opt.max_shrinks) + " shrinks");
}

}  // namespace limitgrp
