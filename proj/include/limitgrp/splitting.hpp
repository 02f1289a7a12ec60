#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limitgrp/presentation.hpp"
#include "limitgrp/representation.hpp"
#include "limitgrp/sampler.hpp"
#include "limitgrp/text_format.hpp"

namespace limitgrp {

enum class SplittingKind { amalgamation, hnn };

/// G1 *_E G2 or G' *_E over a finitely generated abelian edge group E, given by the
/// images of E's generators on each side. E may be trivial (empty edge lists).
class OneEdgedSplitting {
 public:
  static OneEdgedSplitting amalgamation(Presentation left, Presentation right,
                                        std::vector<Word> edge_in_left, std::vector<Word> edge_in_right) {
    if (edge_in_left.size() != edge_in_right.size()) {
      throw Error("amalgamation: edge lists have different lengths");
    }
    for (const Word& w : edge_in_left) left.check_word(w);
    for (const Word& w : edge_in_right) right.check_word(w);
    OneEdgedSplitting s;
    s.kind_ = SplittingKind::amalgamation;
    s.first_ = std::move(left);
    s.second_ = std::move(right);
    s.edge_a_ = std::move(edge_in_left);
    s.edge_b_ = std::move(edge_in_right);
    s.assemble();
    return s;
  }

  /// HNN extension of `vertex` with stable letter t and t edge[i] t^-1 = edge_conjugate[i].
  static OneEdgedSplitting hnn(Presentation vertex, std::vector<Word> edge,
                               std::vector<Word> edge_conjugate, std::string stable_letter) {
    if (edge.size() != edge_conjugate.size()) throw Error("hnn: edge lists have different lengths");
    for (const Word& w : edge) vertex.check_word(w);
    for (const Word& w : edge_conjugate) vertex.check_word(w);
    OneEdgedSplitting s;
    s.kind_ = SplittingKind::hnn;
    s.first_ = std::move(vertex);
    s.edge_a_ = std::move(edge);
    s.edge_b_ = std::move(edge_conjugate);
    s.letter_ = std::move(stable_letter);
    s.assemble();
    return s;
  }

  SplittingKind kind() const noexcept { return kind_; }
  bool is_hnn() const noexcept { return kind_ == SplittingKind::hnn; }

  const Presentation& left() const { return first_; }
  const Presentation& right() const { return second_; }
  const Presentation& vertex() const { return first_; }
  const std::vector<Word>& edge_in_left() const { return edge_a_; }
  const std::vector<Word>& edge_in_right() const { return edge_b_; }
  const std::vector<Word>& edge() const { return edge_a_; }
  const std::vector<Word>& edge_conjugate() const { return edge_b_; }
  const std::string& stable_letter() const { return letter_; }

  /// The group G: generators of both sides (or vertex plus t); relators of the factors
  /// followed by one edge relator per edge generator.
  const Presentation& assembled() const { return assembled_; }
  std::size_t factor_relator_count() const { return factor_relators_; }

  /// The factor that carries the twisting element: G2 for amalgamations, G' for HNN.
  const Presentation& twist_side() const { return is_hnn() ? first_ : second_; }
  /// Edge generators as seen from the twist side.
  const std::vector<Word>& twist_side_edge() const { return is_hnn() ? edge_a_ : edge_b_; }

  /// Offset of the twist side's generators inside the assembled presentation.
  std::uint32_t twist_side_offset() const {
    return is_hnn() ? 0u : static_cast<std::uint32_t>(first_.rank());
  }
  std::uint32_t stable_letter_index() const { return static_cast<std::uint32_t>(first_.rank()); }

  /// Generators of G that the elementary twist moves: G2's (amalgam) or t (HNN).
  std::vector<std::uint32_t> moved_generators() const {
    std::vector<std::uint32_t> out;
    if (is_hnn()) {
      out.push_back(stable_letter_index());
    } else {
      for (std::uint32_t i = 0; i < second_.rank(); ++i) out.push_back(twist_side_offset() + i);
    }
    return out;
  }

  Word embed_twist_side(const Word& w) const {
    twist_side().check_word(w);
    return w.widened(assembled_.rank(), twist_side_offset());
  }

  /// Pairs (u, v) of words in G with u = v imposed by the edge group.
  std::vector<std::pair<Word, Word>> edge_pairs() const {
    std::vector<std::pair<Word, Word>> out;
    const std::size_t n = assembled_.rank();
    for (std::size_t i = 0; i < edge_a_.size(); ++i) {
      if (is_hnn()) {
        const Word t = Word::generator(n, stable_letter_index());
        out.emplace_back(conjugate(edge_a_[i].widened(n), t), edge_b_[i].widened(n));
      } else {
        out.emplace_back(edge_a_[i].widened(n), edge_b_[i].widened(n, static_cast<std::uint32_t>(first_.rank())));
      }
    }
    return out;
  }

 private:
  void assemble() {
    std::vector<std::string> names = first_.generator_names();
    std::string name;
    if (is_hnn()) {
      names.push_back(letter_);
      name = first_.name() + "*_E";
    } else {
      names.insert(names.end(), second_.generator_names().begin(), second_.generator_names().end());
      name = first_.name() + "*_E" + second_.name();
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (names[i] == names[j]) throw Error("splitting: generator name '" + names[i] + "' occurs twice");
      }
    }
    const std::size_t n = names.size();
    std::vector<Word> rels;
    for (const Word& r : first_.relators()) rels.push_back(r.widened(n));
    if (!is_hnn()) {
      for (const Word& r : second_.relators()) rels.push_back(r.widened(n, static_cast<std::uint32_t>(first_.rank())));
    }
    factor_relators_ = rels.size();
    assembled_ = Presentation(name, names, {});
    for (const auto& [u, v] : edge_pairs()) {
      Word r = u * v.inverse();
      if (!r.empty()) rels.push_back(std::move(r));
    }
    assembled_ = Presentation(name, std::move(names), std::move(rels));
  }

  SplittingKind kind_ = SplittingKind::amalgamation;
  Presentation first_;
  Presentation second_;
  std::vector<Word> edge_a_;
  std::vector<Word> edge_b_;
  std::string letter_;
  Presentation assembled_;
  std::size_t factor_relators_ = 0;
};

/// Sample count, tolerance and seed for the numeric certificates (edge abelianness,
/// centralizer membership). A failed certificate is an error, never a silent pass.
struct CertifyOptions {
  int samples = 10;
  double tol = 1e-6;
  std::uint64_t seed = 1;
};

namespace detail {

inline double max_commutator_defect(const Representation& rep, const Word& a, std::span<const Word> others) {
  const Mat2C ea = evaluate(rep, a);
  double worst = 0.0;
  for (const Word& b : others) {
    const Mat2C eb = evaluate(rep, b);
    worst = std::max(worst, (ea * eb - eb * ea).norm() / std::max(1.0, ea.norm() * eb.norm()));
  }
  return worst;
}

}  // namespace detail

/// Checks that the edge generators pairwise commute under sampled representations of
/// each side. Throws CertificationError on a violation.
inline void certify_abelian_edge(const OneEdgedSplitting& s, const CertifyOptions& opt = {}) {
  Rng rng(opt.seed);
  auto check_side = [&](const Presentation& p, const std::vector<Word>& edge) {
    for (int k = 0; k < opt.samples; ++k) {
      const Representation rep = sample_representation(p, rng);
      for (std::size_t i = 0; i < edge.size(); ++i) {
        if (detail::max_commutator_defect(rep, edge[i], edge) > opt.tol) {
          throw CertificationError("edge group is not abelian in '" + p.name() + "'");
        }
      }
    }
  };
  check_side(s.left(), s.is_hnn() ? s.edge() : s.edge_in_left());
  if (!s.is_hnn()) check_side(s.right(), s.edge_in_right());
}

/// Certifies e in Z(E) on the twist side: e commutes with every edge word under
/// opt.samples sampled representations of that factor.
inline void certify_centralizer(const OneEdgedSplitting& s, const Word& e, const CertifyOptions& opt = {}) {
  s.twist_side().check_word(e);
  Rng rng(opt.seed);
  for (int k = 0; k < opt.samples; ++k) {
    const Representation rep = sample_representation(s.twist_side(), rng);
    const double defect = detail::max_commutator_defect(rep, e, s.twist_side_edge());
    if (defect > opt.tol) {
      throw CertificationError("twisting element does not centralize the edge group (defect " +
                               std::to_string(defect) + ")");
    }
  }
}

namespace detail {

inline GroupMap twist_map(const OneEdgedSplitting& s, const Presentation& on, const Word& e_in_g) {
  const std::size_t n = on.rank();
  std::vector<Word> images;
  for (std::uint32_t i = 0; i < n; ++i) images.push_back(Word::generator(n, i));
  for (std::uint32_t i : s.moved_generators()) {
    images[i] = s.is_hnn() ? images[i] * e_in_g : conjugate(images[i], e_in_g);
  }
  return GroupMap(on, on, std::move(images));
}

}  // namespace detail

/// Dehn twist tau_{Delta,e}: identity on G1 (resp. G'), conjugation by e on G2's
/// generators (resp. t -> t e). `e` is a word over the twist side.
inline GroupMap elementary_twist(const OneEdgedSplitting& s, const Word& e, const CertifyOptions& opt = {}) {
  certify_centralizer(s, e, opt);
  return detail::twist_map(s, s.assembled(), s.embed_twist_side(e));
}

/// The free cover G~ -> G with the lifted twist. pi is the identity on generator names,
/// so e~ is spelled exactly like e.
struct LiftData {
  OneEdgedSplitting splitting;
  Word edge_element;           // e, in G
  Presentation lifted_group;   // free on G's generators
  GroupMap projection;         // pi: G~ -> G
  Word lifted_edge_element;    // e~, in G~
  GroupMap base_twist;         // tau on G
  GroupMap lifted_twist;       // tau~ on G~
};

inline LiftData lift(const OneEdgedSplitting& s, const Word& e, const CertifyOptions& opt = {}) {
  GroupMap base = elementary_twist(s, e, opt);
  const Presentation& g = s.assembled();
  Presentation free_cover(g.name() + "~", g.generator_names());
  std::vector<Word> pi_images;
  for (std::uint32_t i = 0; i < g.rank(); ++i) pi_images.push_back(g.generator(i));
  GroupMap pi(free_cover, g, std::move(pi_images));
  const Word e_g = s.embed_twist_side(e);
  const Word e_lift = e_g;  // same letters: pi is the identity on names
  GroupMap lifted = detail::twist_map(s, free_cover, e_lift);
  return LiftData{s, e_g, std::move(free_cover), std::move(pi), e_lift, std::move(base), std::move(lifted)};
}

struct DiagramReport {
  double max_residual = 0.0;
  std::size_t representations = 0;
  std::size_t off_variety = 0;  // inputs that were not points of R(G) within tol
  bool passed = true;
};

/// Compares rho(pi(tau~(x))) with rho(tau(pi(x))) for every generator x of G~ and
/// every representation rho of G.
inline DiagramReport check_diagram(const LiftData& l, std::span<const Representation> reps, double tol) {
  DiagramReport out;
  for (const Representation& rho : reps) {
    ++out.representations;
    if (!is_on_variety(rho, l.splitting.edge_pairs()).within(tol)) ++out.off_variety;
    for (std::uint32_t i = 0; i < l.lifted_group.rank(); ++i) {
      const Word x = l.lifted_group.generator(i);
      const Mat2C up = evaluate(rho, apply_map(l.projection, apply_map(l.lifted_twist, x)));
      const Mat2C down = evaluate(rho, apply_map(l.base_twist, apply_map(l.projection, x)));
      out.max_residual = std::max(out.max_residual, (up - down).norm());
    }
  }
  out.passed = out.off_variety == 0 && out.max_residual <= tol;
  return out;
}

/// A split line resolved against its document's groups.
struct ParsedSplitting {
  OneEdgedSplitting splitting;
  std::optional<Word> twist;  // over the twist side
};

inline ParsedSplitting splitting_from_stanza(const PresentationDocument& doc, const SplitStanza& st) {
  auto need = [&](const std::string& key) -> const SplitStanza::Value& {
    const auto* v = st.field(key);
    if (!v) throw ParseError("split line missing field '" + key + "'", st.line, 1);
    return *v;
  };
  auto group = [&](const std::string& key) -> const Presentation& {
    const auto& v = need(key);
    const Presentation* p = doc.find(v.text);
    if (!p) throw ParseError("unknown group '" + v.text + "'", v.line, v.column);
    return *p;
  };
  auto words = [&](const std::string& key, const Presentation& p) {
    const auto& v = need(key);
    return parse_word_list(v.text, p.generator_names(), v.line, v.column);
  };
  static const std::vector<std::string> amalgam_keys{"left", "right", "edge_left", "edge_right", "twist"};
  static const std::vector<std::string> hnn_keys{"vertex", "edge", "conj", "letter", "twist"};
  const auto& allowed = st.kind == "hnn" ? hnn_keys : amalgam_keys;
  for (const auto& [k, v] : st.fields) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw ParseError("unknown field '" + k + "' for split " + st.kind, v.line, v.column);
    }
  }

  if (st.kind == "hnn") {
    const Presentation& vtx = group("vertex");
    const auto& letter = need("letter");
    if (letter.text.empty()) throw ParseError("empty stable letter", letter.line, letter.column);
    ParsedSplitting out{OneEdgedSplitting::hnn(vtx, words("edge", vtx), words("conj", vtx), letter.text), {}};
    if (const auto* t = st.field("twist")) out.twist = parse_word(t->text, vtx.generator_names(), t->line, t->column);
    return out;
  }
  const Presentation& l = group("left");
  const Presentation& r = group("right");
  ParsedSplitting out{OneEdgedSplitting::amalgamation(l, r, words("edge_left", l), words("edge_right", r)), {}};
  if (const auto* t = st.field("twist")) out.twist = parse_word(t->text, r.generator_names(), t->line, t->column);
  return out;
}

}  // namespace limitgrp
