#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "limitgrp/cli.hpp"

using namespace limitgrp;

namespace {

const std::string kData = LIMITGRP_DATA_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("limitgrp-test-" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, VerifyResolutionExitCodes) {
  const CliRun ok = run({"verify-resolution", kData + "/resolutions/f2-z2-z.json"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["passed"], true);
  for (const char* f : {"bad-witness", "missing-witness", "corrupted-map", "bad-relator", "identity"}) {
    const CliRun bad = run({"verify-resolution", kData + "/resolutions/" + f + ".json"});
    EXPECT_EQ(bad.code, 1) << f;
    EXPECT_FALSE(bad.err.empty());
  }
}

TEST(Cli, VerifyResolutionWritesOutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "limitgrp-test-report.json").string();
  const CliRun r = run({"verify-resolution", kData + "/resolutions/f2-z2-z.json", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(nlohmann::json::parse(read_text_file(path))["passed"], true);
}

TEST(Cli, SameSeedSameBytes) {
  const auto a = run({"verify-resolution", kData + "/resolutions/f2-z2-z.json", "--seed", "3"});
  const auto b = run({"verify-resolution", kData + "/resolutions/f2-z2-z.json", "--seed", "3"});
  const auto c = run({"verify-resolution", kData + "/resolutions/f2-z2-z.json", "--seed", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, CheckTwist) {
  const CliRun r = run({"check-twist", kData + "/splittings/amalgam.split", "--seeds", "3", "--tol", "1e-9"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["splittings"].size(), 1u);
  EXPECT_EQ(j["splittings"][0]["flows"].size(), 3u);
  EXPECT_FALSE(j["splittings"][0]["flows"][0].contains("rows"));
  const CliRun rows = run({"check-twist", kData + "/splittings/z2-hnn.split", "--seeds", "1", "--rows"});
  EXPECT_EQ(nlohmann::json::parse(rows.out)["splittings"][0]["flows"][0]["rows"].size(), 100u);
}

TEST(Cli, CheckTwistRejectsNonCentralizingTwist) {
  const auto path = temp_file("nc.split",
                              "group Z2\ngens: a b\nrels: [a,b]\ngroup F2\ngens: c d\n"
                              "split amalgam left=Z2 right=F2 edge_left=a edge_right=c twist=d\n");
  const CliRun r = run({"check-twist", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("centralize"), std::string::npos);
}

TEST(Cli, EstimateDim) {
  const CliRun r = run({"estimate-dim", kData + "/groups/abelian.grp", "--group", "Z2", "--samples", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 4);
  const CliRun f = run({"estimate-dim", kData + "/groups/free.grp", "--samples", "1"});
  EXPECT_EQ(nlohmann::json::parse(f.out)["dimension"], 3);
}

TEST(Cli, LatticeHeight) {
  const CliRun ok = run({"lattice-height", kData + "/lattices/depth3.txt"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["height"], 3);
  EXPECT_EQ(run({"lattice-height", kData + "/lattices/adversarial.json"}).code, 1);
  EXPECT_EQ(run({"lattice-height", kData + "/lattices/depth3.txt", "--rank", "1"}).code, 0);
  EXPECT_EQ(run({"lattice-height", kData + "/lattices/depth3.txt", "--length", "2"}).code, 1);
  const auto norank = temp_file("norank.txt", "group:G\n");
  EXPECT_EQ(run({"lattice-height", norank}).code, 2);
  EXPECT_EQ(run({"lattice-height", norank, "--rank", "2"}).code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify-resolution"}).code, 2);
  EXPECT_EQ(run({"verify-resolution", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"verify-resolution", kData + "/resolutions/f2-z2-z.json", "--seed", "x"}).code, 2);
  EXPECT_EQ(run({"check-twist", kData + "/groups/free.grp"}).code, 2);
  EXPECT_EQ(run({"estimate-dim", kData + "/groups/free.grp", "--delta", "-1"}).code, 2);
  const auto bad = temp_file("bad.grp", "group G\ngens: a b\nrels: a c\n");
  const CliRun r = run({"estimate-dim", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  const auto badjson = temp_file("bad.json", "{\"stages\": [");
  EXPECT_EQ(run({"verify-resolution", badjson}).code, 2);
  EXPECT_EQ(run({"lattice-height", temp_file("bad-lattice.txt", "group:G\n  spiral:S\n")}).code, 2);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }
