#include <gtest/gtest.h>

#include "limitgrp/catalog.hpp"
#include "limitgrp/pipeline.hpp"

using namespace limitgrp;

namespace {

ResolutionDescriptor fixture(const std::string& name) { return parse_resolution(catalog_file("resolutions/" + name)); }

std::vector<std::optional<std::size_t>> dims(const ResolutionReport& r) {
  std::vector<std::optional<std::size_t>> out;
  for (const auto& s : r.stages) out.push_back(s.dimension);
  return out;
}

HarnessOptions fast() {
  HarnessOptions opt;
  opt.samples_per_stage = 8;
  opt.certification_samples = 8;
  return opt;
}

}  // namespace

TEST(Resolution, ParsesFixture) {
  const ResolutionDescriptor d = fixture("f2-z2-z.json");
  EXPECT_EQ(d.stages.size(), 3u);
  EXPECT_EQ(d.length(), 2u);
  EXPECT_EQ(d.stages[1].relators().size(), 1u);
  ASSERT_TRUE(d.witnesses[0].has_value());
  EXPECT_EQ(*d.terminal_rank, 1u);
  EXPECT_TRUE(d.maps[1].images[1].empty());
}

TEST(Resolution, ParseErrors) {
  EXPECT_THROW(parse_resolution("{"), Error);
  EXPECT_THROW(parse_resolution(R"({"stages": []})"), Error);
  EXPECT_THROW(parse_resolution(R"({"stages": [{"gens": ["a"]}, {"gens": ["a"]}], "maps": []})"), Error);
  EXPECT_THROW(parse_resolution(
                   R"({"stages": [{"gens": ["a"]}, {"gens": ["a"]}], "maps": [{"images": ["a", "a"]}]})"),
               Error);
  EXPECT_THROW(parse_resolution(R"({"stages": [{"gens": ["a"]}, {"gens": ["a"]}], "maps": [{"images": ["b"]}]})"),
               Error);
}

TEST(Resolution, StagesMayBeGivenAsText) {
  const ResolutionDescriptor d = parse_resolution(
      R"({"stages": ["group F2\ngens: a b\n", "group Z\ngens: a\n"], "maps": [{"images": ["a", "1"]}],
          "witnesses": ["b"]})");
  EXPECT_EQ(d.stages[0].rank(), 2u);
  EXPECT_EQ(d.stages[1].name(), "Z");
}

TEST(Certify, IdentityWithoutWitnessIsRejected) {
  const CertificationReport r = certify_resolution(fixture("identity.json"), fast());
  EXPECT_FALSE(r.certified);
  ASSERT_EQ(r.maps.size(), 1u);
  EXPECT_FALSE(r.maps[0].witness_present);
}

TEST(Certify, WitnessesOfTheChain) {
  const CertificationReport r = certify_resolution(fixture("f2-z2-z.json"), fast());
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(r.terminal.certified_free);
  for (const auto& m : r.maps) {
    EXPECT_TRUE(m.witness_dies);
    EXPECT_TRUE(m.witness_survives);
    EXPECT_TRUE(m.relators_compatible);
    EXPECT_TRUE(m.warnings.empty());
  }
}

TEST(Certify, SurvivingWitnessIsFlagged) {
  const CertificationReport r = certify_resolution(fixture("bad-witness.json"), fast());
  EXPECT_FALSE(r.certified);
}

TEST(Certify, VacuousWitnessIsFlagged) {
  // [a,b] in Z^2 is already trivial: it cannot witness properness of Z^2 -> Z
  const ResolutionDescriptor d = parse_resolution(
      R"({"stages": [{"gens": ["a","b"], "rels": ["[a,b]"]}, {"gens": ["a"]}],
          "maps": [{"images": ["a", "1"]}], "witnesses": ["[a,b]"], "terminal_rank": 1})");
  const CertificationReport r = certify_resolution(d, fast());
  EXPECT_FALSE(r.maps[0].witness_survives);
  EXPECT_FALSE(r.certified);
}

TEST(Certify, TerminalIsomorphism) {
  // terminal <a, b | b> is free of rank one via a -> x, b -> 1
  const ResolutionDescriptor d = parse_resolution(
      R"({"stages": [{"gens": ["a","b"]}, {"gens": ["a","b"], "rels": ["b"]}],
          "maps": [{"images": ["a", "b"]}], "witnesses": ["b"], "terminal_rank": 1,
          "terminal_iso": {"gens": ["x"], "images": ["x", "1"]}})");
  const CertificationReport r = certify_resolution(d, fast());
  EXPECT_TRUE(r.terminal.certified_free);
  EXPECT_EQ(r.terminal.rank, 1u);
  EXPECT_TRUE(r.certified);
}

TEST(DimensionSequence, TwoStep) {
  const ResolutionReport r = dimension_sequence(fixture("f2-z2-z.json"));
  EXPECT_EQ(dims(r), (std::vector<std::optional<std::size_t>>{6, 4, 3}));
  EXPECT_EQ(r.strict_decrease, (std::vector<bool>{true, true}));
  EXPECT_EQ(r.k, 2u);
  EXPECT_EQ(r.bound, 3u);
  EXPECT_TRUE(r.bound_holds);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.stages.back().exact);
}

TEST(DimensionSequence, ThreeStep) {
  const ResolutionReport r = dimension_sequence(fixture("f3-z3-z2-z.json"));
  EXPECT_EQ(dims(r), (std::vector<std::optional<std::size_t>>{9, 5, 4, 3}));
  EXPECT_EQ(r.bound, 6u);
  EXPECT_TRUE(r.passed);
}

TEST(DimensionSequence, TrivialResolution) {
  const ResolutionDescriptor d =
      parse_resolution(R"({"stages": [{"name": "F2", "gens": ["a","b"]}], "maps": [], "witnesses": []})");
  const ResolutionReport r = dimension_sequence(d);
  EXPECT_EQ(dims(r), (std::vector<std::optional<std::size_t>>{6}));
  EXPECT_EQ(r.k, 0u);
  EXPECT_TRUE(r.passed);
}

TEST(DimensionSequence, NegativeFixturesFail) {
  for (const char* f : {"bad-witness.json", "missing-witness.json", "corrupted-map.json", "bad-relator.json",
                        "identity.json"}) {
    EXPECT_FALSE(dimension_sequence(fixture(f), fast()).passed) << f;
  }
}

TEST(DimensionSequence, NonHomomorphismIsCaughtOnTheVariety) {
  const ResolutionReport r = dimension_sequence(fixture("bad-relator.json"), fast());
  EXPECT_GT(r.stages[0].off_variety, 0u);
  EXPECT_FALSE(r.certification.maps[0].relators_compatible);
}

TEST(DimensionSequence, NonFreeTerminusCarriesACaveat) {
  const ResolutionDescriptor d = parse_resolution(
      R"({"stages": [{"gens": ["a","b","c"]}, {"gens": ["a","b","c"], "rels": ["[a,b]","[a,c]","[b,c]"]}],
          "maps": [{"images": ["a","b","c"]}], "witnesses": ["[a,b]"]})");
  const ResolutionReport r = dimension_sequence(d, fast());
  ASSERT_TRUE(r.caveat.has_value());
  EXPECT_FALSE(r.m.has_value());
  EXPECT_EQ(r.bound, 9u);
  EXPECT_EQ(dims(r), (std::vector<std::optional<std::size_t>>{9, 5}));
  EXPECT_TRUE(r.passed);
}

TEST(DimensionSequence, Deterministic) {
  const ResolutionDescriptor d = fixture("f2-z2-z.json");
  const std::string a = verify_resolution(d).report.dump();
  const std::string b = verify_resolution(d).report.dump();
  EXPECT_EQ(a, b);
  HarnessOptions other;
  other.seed = 8;
  EXPECT_NE(a, verify_resolution(d, other).report.dump());
}

TEST(DimensionSequence, ReportShape) {
  const auto j = verify_resolution(fixture("f2-z2-z.json")).report;
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["bound"]["k"], 2);
  EXPECT_EQ(j["bound"]["m"], 1);
  EXPECT_EQ(j["stages"].size(), 3u);
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j["assumptions"].empty());
}
