#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "limitgrp/word.hpp"

namespace limitgrp {

/// Element of the integral group ring Z[F_n]: finite sum of integer multiples of
/// reduced words. Terms are kept sorted by word with no zero coefficients.
class GroupRingElement {
 public:
  struct Term {
    long coefficient;
    Word word;
    friend bool operator==(const Term&, const Term&) = default;
  };

  GroupRingElement() = default;

  void add(long coefficient, const Word& w) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& other) {
    for (const auto& [w, c] : other.terms_) add(c, w);
    return *this;
  }

  /// Left multiplication by a group element: g * sum c_i w_i = sum c_i (g w_i).
  GroupRingElement left_multiplied(const Word& g) const {
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.add(c, g * w);
    return out;
  }

  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) out.push_back({c, w});
    return out;
  }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Augmentation: sum of coefficients (image under Z[F] -> Z).
  long augmentation() const noexcept {
    long s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, long> terms_;
};

/// Fox derivative dw/dx_i, accumulated left to right over the prefix of w.
inline GroupRingElement fox_derivative(const Word& w, std::uint32_t i) {
  if (i >= w.rank()) throw MalformedWord("fox derivative: generator index out of range");
  GroupRingElement out;
  Word prefix(w.rank());
  for (const Letter& l : w) {
    if (l.gen == i) {
      if (l.sign > 0) {
        out.add(1, prefix);
      } else {
        Word p = prefix;
        p.push_back(l);
        out.add(-1, p);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

}  // namespace limitgrp
