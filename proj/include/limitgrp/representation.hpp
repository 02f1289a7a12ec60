#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "limitgrp/presentation.hpp"
#include "limitgrp/sl2c.hpp"
#include "limitgrp/text_format.hpp"

namespace limitgrp {

/// A point of Hom(G, SL(2,C)) given by generator images.
struct Representation {
  Presentation presentation;
  std::vector<Mat2C> matrices;

  Representation() = default;
  Representation(Presentation p, std::vector<Mat2C> ms)
      : presentation(std::move(p)), matrices(std::move(ms)) {
    if (matrices.size() != presentation.rank()) throw RankMismatch(presentation.rank(), matrices.size());
  }

  std::size_t rank() const noexcept { return matrices.size(); }
};

/// Product of generator matrices (or their inverses) along w.
inline Mat2C evaluate(std::span<const Mat2C> matrices, const Word& w) {
  if (w.rank() != matrices.size()) throw RankMismatch(matrices.size(), w.rank());
  Mat2C out = identity2();
  for (const Letter& l : w) {
    const Mat2C& m = matrices[l.gen];
    out = out * (l.sign > 0 ? m : sl2_inverse(m));
  }
  return out;
}

inline Mat2C evaluate(const Representation& rep, const Word& w) { return evaluate(rep.matrices, w); }

/// Residuals of a candidate point against its presentation, plus optional edge-matching pairs.
struct VarietyResidual {
  double relator = 0.0;        // max ||ev_r - I||_F over relators
  double edge = 0.0;           // max ||ev_u - ev_v||_F over edge pairs
  double unimodularity = 0.0;  // max |det - 1| over generator images

  double total() const { return std::max(relator, edge); }
  bool within(double tol) const { return relator <= tol && edge <= tol; }
};

inline VarietyResidual is_on_variety(const Representation& rep,
                                     std::span<const std::pair<Word, Word>> edge_pairs = {}) {
  VarietyResidual out;
  for (const Word& r : rep.presentation.relators()) {
    out.relator = std::max(out.relator, (evaluate(rep, r) - identity2()).norm());
  }
  for (const auto& [u, v] : edge_pairs) {
    out.edge = std::max(out.edge, (evaluate(rep, u) - evaluate(rep, v)).norm());
  }
  for (const Mat2C& m : rep.matrices) out.unimodularity = std::max(out.unimodularity, std::abs(det(m) - 1.0));
  return out;
}

/// Finite proxy for nondegeneracy: every test word has |trace + 2| > delta, and every
/// nontrivial test word evaluates away from I (injectivity on a ball).
inline bool screen_nondegenerate(const Representation& rep, std::span<const Word> test_words,
                                 double delta = kDefaultDegeneracyThreshold) {
  for (const Word& w : test_words) {
    const Mat2C m = evaluate(rep, w);
    if (trace_gap(m) <= delta) return false;
    if (!w.empty() && (m - identity2()).norm() <= delta) return false;
  }
  return true;
}

/// Precomposition R(L') -> R(L) along f: L -> L'.
inline Representation pullback(const GroupMap& f, const Representation& rep) {
  if (!(rep.presentation == f.target)) {
    throw RankMismatch("pullback: representation is not over the map's target");
  }
  std::vector<Mat2C> ms;
  ms.reserve(f.images.size());
  for (const Word& w : f.images) ms.push_back(evaluate(rep, w));
  return Representation(f.source, std::move(ms));
}

/// Uniform random point of SL(2,C)^n in the sense of sample_sl2; on the variety only
/// when the presentation is free.
inline Representation sample_free_point(const Presentation& p, Rng& rng) {
  std::vector<Mat2C> ms;
  for (std::size_t i = 0; i < p.rank(); ++i) ms.push_back(sample_sl2(rng));
  return Representation(p, std::move(ms));
}

inline nlohmann::json representation_to_json(const Representation& rep) {
  nlohmann::json ms = nlohmann::json::array();
  for (const Mat2C& m : rep.matrices) ms.push_back(mat_to_json(m));
  return {{"presentation", rep.presentation.name()}, {"matrices", std::move(ms)}};
}

inline Representation representation_from_json(const nlohmann::json& j, const Presentation& p) {
  std::vector<Mat2C> ms;
  for (const auto& m : j.at("matrices")) ms.push_back(mat_from_json(m));
  return Representation(p, std::move(ms));
}

}  // namespace limitgrp
