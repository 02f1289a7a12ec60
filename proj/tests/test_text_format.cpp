#include <gtest/gtest.h>

#include "limitgrp/testing/oracles.hpp"
#include "limitgrp/text_format.hpp"

using namespace limitgrp;
namespace oracle = limitgrp::testing;

namespace {

const std::vector<std::string> kAB{"a", "b", "t"};

}  // namespace

TEST(TextFormat, WordSyntax) {
  EXPECT_EQ(parse_word("a b a^-1", kAB), Word(3, {gen(0), gen(1), inv(0)}));
  EXPECT_EQ(parse_word("a*b*a^-1", kAB), parse_word("a b a^-1", kAB));
  EXPECT_EQ(parse_word("[a,b]", kAB), commutator(Word::generator(3, 0), Word::generator(3, 1)));
  EXPECT_EQ(parse_word("(a b)^2", kAB), parse_word("a b a b", kAB));
  EXPECT_EQ(parse_word("(a b)^-1", kAB), parse_word("b^-1 a^-1", kAB));
  EXPECT_TRUE(parse_word("1", kAB).empty());
  EXPECT_TRUE(parse_word("a a^-1", kAB).empty());
  EXPECT_EQ(parse_word("t^0 b", kAB), Word::generator(3, 1));
}

TEST(TextFormat, WordListSeparators) {
  EXPECT_EQ(parse_word_list("[a,b] ; a^2", kAB).size(), 2u);
  EXPECT_EQ(parse_word_list("[a,b], a^2, b", kAB).size(), 3u);
  EXPECT_TRUE(parse_word_list("  ", kAB).empty());
}

TEST(TextFormat, ErrorsCarryPosition) {
  try {
    parse_word("a c", kAB, 4, 7);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(parse_word("[a,b", kAB), ParseError);
  EXPECT_THROW(parse_word("a^", kAB), ParseError);
  EXPECT_THROW(parse_word("(a", kAB), ParseError);
}

TEST(TextFormat, FormatRoundTrip) {
  Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    const Word w = oracle::random_word(3, k % 25, rng);
    ASSERT_EQ(parse_word(format_word(w, kAB), kAB), w);
  }
  EXPECT_EQ(format_word(parse_word("a a b^-1 b^-1 b^-1 a", kAB), kAB), "a^2*b^-3*a");
  EXPECT_EQ(format_word(Word(3), kAB), "1");
}

TEST(TextFormat, Document) {
  const auto doc = parse_presentation_document(
      "# two groups\n"
      "group Z2\n"
      "gens: a b\n"
      "rels: [a,b]\n"
      "\n"
      "group F2\n"
      "gens: c d   # free\n"
      "split amalgam left=Z2 right=F2 edge_left=a edge_right=c\n");
  ASSERT_EQ(doc.groups.size(), 2u);
  EXPECT_EQ(doc.groups[0].name(), "Z2");
  EXPECT_EQ(doc.groups[0].relators().size(), 1u);
  EXPECT_TRUE(doc.groups[1].is_free());
  ASSERT_EQ(doc.splits.size(), 1u);
  EXPECT_EQ(doc.splits[0].kind, "amalgam");
  EXPECT_EQ(doc.splits[0].field("edge_right")->text, "c");
  EXPECT_EQ(doc.splits[0].line, 8u);
  EXPECT_NE(doc.find("F2"), nullptr);
  EXPECT_EQ(doc.find("F3"), nullptr);
}

TEST(TextFormat, DocumentErrors) {
  EXPECT_THROW(parse_presentation_document("gens: a\n"), ParseError);
  EXPECT_THROW(parse_presentation_document("group G\nrels: a\n"), ParseError);
  EXPECT_THROW(parse_presentation_document("group G\ngens: a\nrels: b\n"), ParseError);
  EXPECT_THROW(parse_presentation_document("group G\ngens: a\nfoo\n"), ParseError);
  EXPECT_THROW(parse_presentation_document("group G\ngens: a\nrels: a a^-1\n"), ParseError);
  try {
    parse_presentation_document("group G\ngens: a b\nrels: a b c\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(TextFormat, PresentationRoundTrip) {
  const Presentation p = parse_presentation("group H\ngens: x y z\nrels: [x,y] ; x^2*z^-3\n");
  const Presentation q = parse_presentation(format_presentation(p));
  EXPECT_EQ(p, q);
  EXPECT_EQ(p.generator_names(), q.generator_names());
  EXPECT_EQ(q.name(), "H");
}
