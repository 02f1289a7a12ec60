#include <gtest/gtest.h>

#include "limitgrp/catalog.hpp"
#include "limitgrp/lattice.hpp"

using namespace limitgrp;

namespace {

AnalysisLattice from_text(const std::string& s) { return lattice_from_text(s); }

}  // namespace

TEST(Lattice, FreeAndAbelianHaveHeightZero) {
  EXPECT_EQ(height(parse_lattice(catalog_file("lattices/free.json"))), 0u);
  EXPECT_EQ(height(parse_lattice(catalog_file("lattices/abelian.json"))), 0u);
  EXPECT_EQ(height(from_text("group:G\n")), 0u);
}

TEST(Lattice, TwoLevel) {
  const AnalysisLattice l = parse_lattice(catalog_file("lattices/two-level.json"));
  EXPECT_EQ(height(l), 1u);
  EXPECT_EQ(l.declared_rank, 3u);
  EXPECT_EQ(level_of(l, "R"), 1u);
  EXPECT_EQ(level_of(l, "G"), 0u);
}

TEST(Lattice, DepthThreeInBothForms) {
  const AnalysisLattice j = parse_lattice(catalog_file("lattices/depth3.json"));
  const AnalysisLattice t = parse_lattice(catalog_file("lattices/depth3.txt"));
  EXPECT_EQ(height(j), 3u);
  EXPECT_EQ(j, t);
  EXPECT_EQ(level_of(t, "R3"), 3u);
}

TEST(Lattice, SerializationRoundTrips) {
  for (const char* f : {"lattices/free.json", "lattices/two-level.json", "lattices/depth3.json",
                        "lattices/adversarial.json"}) {
    const AnalysisLattice l = parse_lattice(catalog_file(f));
    EXPECT_EQ(lattice_from_json(lattice_to_json(l)), l) << f;
    EXPECT_EQ(lattice_from_text(lattice_to_text(l)), l) << f;
  }
}

TEST(Lattice, BoundChecks) {
  EXPECT_TRUE(check_bound(parse_lattice(catalog_file("lattices/free.json"))).passed);
  EXPECT_TRUE(check_bound(parse_lattice(catalog_file("lattices/depth3.json"))).passed);
  const BoundReport bad = check_bound(parse_lattice(catalog_file("lattices/adversarial.json")));
  EXPECT_EQ(bad.height, 7u);
  EXPECT_EQ(bad.rank_bound, 6u);
  EXPECT_FALSE(bad.passed);
  // against a resolution length
  const AnalysisLattice d3 = parse_lattice(catalog_file("lattices/depth3.json"));
  EXPECT_TRUE(check_bound(d3, 3).passed);
  EXPECT_FALSE(check_bound(d3, 2).passed);
}

TEST(Lattice, GraftAddsSubHeight) {
  const AnalysisLattice base = from_text("rank: 3\ngroup:G\n  free-factor-level:G.A\n    rigid:R\n  free:F\n");
  const AnalysisLattice sub = from_text("group:R\n  free-factor-level:R.A\n    rigid:S\n      free-factor-level:S.A\n        abelian:Z\n");
  ASSERT_EQ(height(base), 1u);
  ASSERT_EQ(height(sub), 2u);
  const AnalysisLattice g = graft(base, "R", sub);
  EXPECT_EQ(height(g), level_of(base, "R") + height(sub));
  EXPECT_THROW(graft(base, "missing", sub), LatticeError);
  EXPECT_THROW(graft(g, "R", sub), LatticeError);
}

TEST(Lattice, ShapeValidation) {
  EXPECT_THROW(from_text("group:G\n  group:H\n"), LatticeError);
  EXPECT_THROW(from_text("group:G\n  free-factor-level:A\n    free-factor-level:B\n"), LatticeError);
  EXPECT_THROW(from_text("group:G\n  free-factor-level:A\n    quadratically-hanging:Q\n      rigid:R\n"), LatticeError);
  EXPECT_THROW(from_text("group:G\n  free:F\n    rigid:R\n"), LatticeError);
  EXPECT_THROW(from_text("group:G\n  free-factor-level:A\n    rigid:R\n      rigid:S\n"), LatticeError);
  EXPECT_THROW(from_text("group:G\n   rigid:R\n"), ParseError);
  EXPECT_THROW(from_text("group:G\n      rigid:R\n"), ParseError);
  EXPECT_THROW(from_text("wobbly:G\n"), ParseError);
  EXPECT_THROW(from_text(""), ParseError);
  EXPECT_THROW(parse_lattice("{\"rank\": 1, \"root\": {\"label\": \"G\", \"kind\": \"spiral\"}}"), LatticeError);
  EXPECT_THROW(parse_lattice("{ nope"), LatticeError);
}

TEST(Lattice, ReportJson) {
  const auto j = bound_report_to_json(check_bound(parse_lattice(catalog_file("lattices/adversarial.json")), 4));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["height"], 7);
  EXPECT_EQ(j["within_rank_bound"], false);
  EXPECT_EQ(j["within_resolution_bound"], false);
}
