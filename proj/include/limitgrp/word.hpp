#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "limitgrp/error.hpp"

namespace limitgrp {

/// A signed generator: x_gen^sign with sign in {+1, -1}.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const noexcept { return {gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(const Letter& other) const noexcept {
    return gen == other.gen && sign == -other.sign;
  }
  /// Dense index in [0, 2*rank): 2*gen for x, 2*gen+1 for x^-1.
  constexpr std::size_t label() const noexcept { return 2 * gen + (sign < 0 ? 1 : 0); }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter gen(std::uint32_t i) noexcept { return {i, 1}; }
constexpr Letter inv(std::uint32_t i) noexcept { return {i, -1}; }

/// Freely reduced word in the free group of a given rank.
///
/// The only way to build a Word is through reduction, so the letter sequence never
/// contains an adjacent cancelling pair.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  /// Reduces `letters` with a single stack pass. Throws MalformedWord on an
  /// out-of-range generator index or a sign other than +-1.
  Word(std::size_t rank, std::span<const Letter> letters) : rank_(rank) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) push_back(l);
  }
  Word(std::size_t rank, std::initializer_list<Letter> letters)
      : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word identity(std::size_t rank) { return Word(rank); }
  static Word generator(std::size_t rank, std::uint32_t i) { return Word(rank, {gen(i)}); }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Appends one letter, cancelling against the tail when possible.
  void push_back(Letter l) {
    if (l.gen >= rank_) {
      throw MalformedWord("generator index " + std::to_string(l.gen) + " out of range for rank " +
                          std::to_string(rank_));
    }
    if (l.sign != 1 && l.sign != -1) throw MalformedWord("letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  Word inverse() const {
    Word out(rank_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
  }

  Word& operator*=(const Word& rhs) {
    if (rhs.rank_ != rank_) throw RankMismatch(rank_, rhs.rank_);
    for (const Letter& l : rhs.letters_) push_back(l);
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Sum of exponents of generator i (abelianization coordinate).
  long exponent_sum(std::uint32_t i) const noexcept {
    long s = 0;
    for (const Letter& l : letters_) {
      if (l.gen == i) s += l.sign;
    }
    return s;
  }

  /// Same word viewed in a free group of larger rank (generator indices kept).
  Word widened(std::size_t new_rank, std::uint32_t offset = 0) const {
    Word out(new_rank);
    for (const Letter& l : letters_) out.push_back({l.gen + offset, l.sign});
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

inline Word reduce(std::size_t rank, std::span<const Letter> letters) { return Word(rank, letters); }
inline Word multiply(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& a) { return a.inverse(); }

inline Word power(const Word& w, long k) {
  Word base = k < 0 ? w.inverse() : w;
  Word out(w.rank());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

/// [u, v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

/// Conjugate of w by c: c w c^-1.
inline Word conjugate(const Word& w, const Word& c) { return c * w * c.inverse(); }

/// Every reduced word of length <= radius, shortest first, in a fixed order.
inline std::vector<Word> word_ball(std::size_t rank, std::size_t radius) {
  std::vector<Word> ball{Word(rank)};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= radius; ++len) {
    const std::size_t layer_end = ball.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (std::uint32_t g = 0; g < rank; ++g) {
        for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
          const Word& prev = ball[k];
          if (!prev.empty() && prev.letters().back().cancels({g, s})) continue;
          Word next = prev;
          next.push_back({g, s});
          ball.push_back(std::move(next));
        }
      }
    }
    layer_begin = layer_end;
  }
  return ball;
}

}  // namespace limitgrp
