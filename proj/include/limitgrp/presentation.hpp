#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "limitgrp/error.hpp"
#include "limitgrp/word.hpp"

namespace limitgrp {

/// Finitely presented group <gens | relators>. Names are cosmetic: equality is
/// structural (rank and relators).
class Presentation {
 public:
  Presentation() = default;

  Presentation(std::string name, std::vector<std::string> generator_names,
               std::vector<Word> relators = {})
      : name_(std::move(name)), names_(std::move(generator_names)), relators_(std::move(relators)) {
    for (const Word& r : relators_) {
      if (r.rank() != rank()) throw RankMismatch(rank(), r.rank());
      if (r.empty()) throw MalformedWord("empty relator in presentation '" + name_ + "'");
    }
  }

  /// Free group on n generators named x1..xn.
  static Presentation free(std::size_t n, std::string name = {}) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    if (name.empty()) name = "F" + std::to_string(n);
    return Presentation(std::move(name), std::move(names));
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  bool is_free() const noexcept { return relators_.empty(); }

  Word generator(std::uint32_t i) const { return Word::generator(rank(), i); }
  Word identity() const { return Word(rank()); }

  void check_word(const Word& w) const {
    if (w.rank() != rank()) throw RankMismatch(rank(), w.rank());
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.rank() == b.rank() && a.relators_ == b.relators_;
  }

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Homomorphism given by images of the source generators, written in target generators.
struct GroupMap {
  Presentation source;
  Presentation target;
  std::vector<Word> images;

  GroupMap() = default;
  GroupMap(Presentation src, Presentation tgt, std::vector<Word> imgs)
      : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (images.size() != source.rank()) {
      throw RankMismatch("map has " + std::to_string(images.size()) + " images for a source of rank " +
                         std::to_string(source.rank()));
    }
    for (const Word& w : images) target.check_word(w);
  }

  static GroupMap identity(const Presentation& p) {
    std::vector<Word> imgs;
    for (std::uint32_t i = 0; i < p.rank(); ++i) imgs.push_back(p.generator(i));
    return GroupMap(p, p, std::move(imgs));
  }

  /// Substitutes generator images into w and freely reduces.
  Word operator()(const Word& w) const {
    source.check_word(w);
    Word out(target.rank());
    for (const Letter& l : w) out *= (l.sign > 0 ? images[l.gen] : images[l.gen].inverse());
    return out;
  }

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.source == b.source && a.target == b.target && a.images == b.images;
  }
};

inline Word apply_map(const GroupMap& f, const Word& w) { return f(w); }

/// f o g: first g, then f. Requires g.target == f.source structurally.
inline GroupMap compose(const GroupMap& f, const GroupMap& g) {
  if (!(g.target == f.source)) {
    throw RankMismatch("cannot compose: target '" + g.target.name() + "' does not match source '" +
                       f.source.name() + "'");
  }
  std::vector<Word> imgs;
  imgs.reserve(g.images.size());
  for (const Word& w : g.images) imgs.push_back(f(w));
  return GroupMap(g.source, f.target, std::move(imgs));
}

}  // namespace limitgrp
