#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "limitgrp/error.hpp"

namespace limitgrp {

using Complex = std::complex<double>;
using Mat2C = Eigen::Matrix2cd;
using Rng = std::mt19937_64;

/// Default buffer around the excluded locus trace = -2.
inline constexpr double kDefaultDegeneracyThreshold = 1e-6;

inline Complex trace(const Mat2C& m) { return m(0, 0) + m(1, 1); }
inline Complex det(const Mat2C& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
inline double frobenius(const Mat2C& m) { return m.norm(); }
inline Mat2C identity2() { return Mat2C::Identity(); }

/// |trace(g) + 2|: distance to the parabolic/-I locus.
inline double trace_gap(const Mat2C& g) { return std::abs(trace(g) + 2.0); }

/// Inverse of a determinant-one matrix (adjugate).
inline Mat2C sl2_inverse(const Mat2C& m) {
  Mat2C out;
  out << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return out;
}

/// Relative distance ||a - b|| / max(1, ||b||).
inline double relative_distance(const Mat2C& a, const Mat2C& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

// Coordinates on sl2 in the basis H = diag(1,-1), E = e_12, F = e_21.

inline Mat2C sl2_basis(int k) {
  Mat2C m = Mat2C::Zero();
  switch (k) {
    case 0: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 1: m(0, 1) = 1.0; break;
    case 2: m(1, 0) = 1.0; break;
    default: throw DomainError("sl2 basis index must be 0, 1 or 2");
  }
  return m;
}

/// Coordinates of the traceless part of m.
inline std::array<Complex, 3> sl2_coords(const Mat2C& m) {
  return {(m(0, 0) - m(1, 1)) / 2.0, m(0, 1), m(1, 0)};
}

inline Mat2C from_sl2_coords(const std::array<Complex, 3>& c) {
  Mat2C m;
  m << c[0], c[1], c[2], -c[0];
  return m;
}

/// Adjoint action g X g^-1 on sl2 as a 3x3 matrix in the H, E, F basis.
inline Eigen::Matrix3cd adjoint(const Mat2C& g) {
  const Mat2C gi = sl2_inverse(g);
  Eigen::Matrix3cd out;
  for (int k = 0; k < 3; ++k) {
    const auto c = sl2_coords(g * sl2_basis(k) * gi);
    for (int r = 0; r < 3; ++r) out(r, k) = c[r];
  }
  return out;
}

inline bool is_traceless(const Mat2C& v, double tol = 1e-10) {
  return std::abs(trace(v)) <= tol * std::max(1.0, v.norm());
}

inline bool is_unimodular(const Mat2C& g, double tol = 1e-10) {
  return std::abs(det(g) - 1.0) <= tol * std::max(1.0, g.squaredNorm());
}

/// exp on sl2: cos(theta) I + sinc(theta) v with theta^2 = det(v); both functions are
/// even in theta, so either square root works.
inline Mat2C exp_mat(const Mat2C& v) {
  if (!is_traceless(v)) throw DomainError("exp_mat: argument is not traceless");
  const Complex s = det(v);  // theta^2
  Complex c, sinc;
  if (std::abs(s) < 1e-8) {
    c = 1.0 - s / 2.0 + s * s / 24.0 - s * s * s / 720.0 + s * s * s * s / 40320.0;
    sinc = 1.0 - s / 6.0 + s * s / 120.0 - s * s * s / 5040.0 + s * s * s * s / 362880.0;
  } else {
    const Complex theta = std::sqrt(s);
    c = std::cos(theta);
    sinc = std::sin(theta) / theta;
  }
  return c * identity2() + sinc * v;
}

/// Principal logarithm of a unimodular matrix away from trace -2.
///
/// trace(g) = 2 cos(theta) with theta = acos(trace/2) (Re theta in [0, pi]), and
/// log g = (theta / sin theta)(g - cos(theta) I). Throws DegenerateElement when
/// |trace + 2| <= delta.
inline Mat2C log_mat(const Mat2C& g, double delta = kDefaultDegeneracyThreshold) {
  if (!is_unimodular(g, 1e-8)) throw DomainError("log_mat: argument is not unimodular");
  const double gap = trace_gap(g);
  if (gap <= delta) throw DegenerateElement(gap);
  const Complex c = trace(g) / 2.0;
  const Complex theta = std::acos(c);
  Complex ratio;  // theta / sin(theta)
  if (std::abs(theta) < 1e-4) {
    const Complex t2 = theta * theta;
    ratio = 1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0 + 31.0 * t2 * t2 * t2 / 15120.0;
  } else {
    ratio = theta / std::sin(theta);
  }
  Mat2C out = ratio * (g - c * identity2());
  // project away the rounding-level trace
  const Complex tr = trace(out) / 2.0;
  out(0, 0) -= tr;
  out(1, 1) -= tr;
  return out;
}

/// Standard complex Gaussian (E|z|^2 = 1).
inline Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

/// Random traceless matrix with independent standard complex Gaussian H, E, F coordinates.
inline Mat2C sample_sl2_algebra(Rng& rng) {
  const Complex a = complex_gaussian(rng);
  const Complex b = complex_gaussian(rng);
  const Complex c = complex_gaussian(rng);
  return from_sl2_coords({a, b, c});
}

/// exp of a Gaussian algebra element; deterministic given the generator state.
inline Mat2C sample_sl2(Rng& rng) { return exp_mat(sample_sl2_algebra(rng)); }

inline nlohmann::json mat_to_json(const Mat2C& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return out;
}

inline Mat2C mat_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw Error("matrix JSON must be an array of 4 [re, im] pairs");
  Mat2C m;
  for (int k = 0; k < 4; ++k) {
    const auto& e = j[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2) throw Error("matrix entry must be [re, im]");
    m(k / 2, k % 2) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

}  // namespace limitgrp
