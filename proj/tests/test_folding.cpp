#include <gtest/gtest.h>

#include "limitgrp/folding.hpp"
#include "limitgrp/sl2c.hpp"
#include "limitgrp/testing/oracles.hpp"
#include "limitgrp/text_format.hpp"

using namespace limitgrp;
namespace oracle = limitgrp::testing;

namespace {

std::vector<Word> words(const std::string& s, std::size_t rank) {
  std::vector<std::string> names{"x", "y", "z", "u", "v"};
  names.resize(rank);
  return parse_word_list(s, names);
}

}  // namespace

TEST(Folding, Examples) {
  EXPECT_TRUE(generates_free_group(words("[x,y] ; x ; y", 2), 2));
  EXPECT_FALSE(generates_free_group(words("[x,y]", 2), 2));
  EXPECT_FALSE(generates_free_group(words("x^2", 1), 1));
  EXPECT_TRUE(generates_free_group(words("x y ; y", 2), 2));
  EXPECT_TRUE(generates_free_group(words("x^-1", 1), 1));
  EXPECT_FALSE(generates_free_group(words("x^2 ; y ; x y x^-1", 2), 2));
  EXPECT_TRUE(generates_free_group(words("x^2 ; x^3 ; y", 2), 2));
}

TEST(Folding, EmptyInput) {
  EXPECT_FALSE(generates_free_group({}, 1));
  EXPECT_TRUE(generates_free_group({}, 0));
}

TEST(Folding, NielsenMovesPreserveGeneration) {
  // images of the standard basis under random Nielsen moves generate F_n
  Rng rng(31);
  std::uniform_int_distribution<int> move(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<Word> basis;
    for (std::uint32_t i = 0; i < n; ++i) basis.push_back(Word::generator(n, i));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int step = 0; step < 8; ++step) {
      const std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      switch (move(rng)) {
        case 0: basis[i] = basis[i] * basis[j]; break;
        case 1: basis[i] = basis[j].inverse() * basis[i]; break;
        default: basis[i] = basis[i].inverse(); break;
      }
    }
    ASSERT_TRUE(generates_free_group(basis, n));
  }
}

TEST(Folding, AgreesWithAbelianizationOnNonGenerators) {
  // a family that generates F_n must abelianize to a unimodular matrix
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<Word> ws;
    for (std::size_t i = 0; i < n; ++i) ws.push_back(oracle::random_word(n, 1 + trial % 5, rng));
    const long d = oracle::abelianization_determinant(ws, n);
    if (generates_free_group(ws, n)) {
      ASSERT_EQ(std::abs(d), 1);
    }
    if (std::abs(d) != 1) {
      ASSERT_FALSE(generates_free_group(ws, n));
    }
  }
}

TEST(Folding, CoreGraphOfCommutatorSubgroupIsNotCovering) {
  const StallingsGraph g(2, words("[x,y]", 2));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_FALSE(g.is_covering());
}

TEST(Folding, RankMismatch) { EXPECT_THROW(generates_free_group(words("x", 1), 2), RankMismatch); }
