#include <gtest/gtest.h>

#include "lgk/error.hpp"
#include "lgk/harness.hpp"

namespace lgk {
namespace {

using json = nlohmann::json;

const std::filesystem::path kFixtures{LGK_FIXTURE_DIR};

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Overflow;
}

TEST(Harness, SuiteNames) {
  EXPECT_EQ(suiteNames().size(), 11u);
  EXPECT_EQ(suiteNames().front(), "tits-welldef");
}

TEST(Harness, A1TitsSingleCheck) {
  const auto rep = runSuite(loadSuiteSpec(kFixtures / "a1_tits.json"));
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].status, CheckStatus::Pass);
  EXPECT_EQ(rep.exitCode(), 0);
}

TEST(Harness, A2FlipRecordsC2) {
  const auto rep = runSuite(loadSuiteSpec(kFixtures / "a2_flip.json"));
  EXPECT_EQ(rep.exitCode(), 0);
  const auto& rec = rep.records.front();
  ASSERT_EQ(rec.suite, "fixedgroup");
  EXPECT_EQ(rec.status, CheckStatus::Pass);
  EXPECT_EQ(rec.witness.at("simple").at(0).at("c"), 2);
  EXPECT_TRUE(rec.witness.contains("seed"));
}

TEST(Harness, RejectsMalformedInput) {
  EXPECT_EQ(codeOf([] { loadSuiteSpec(kFixtures / "unknown_suite.json"); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(codeOf([] { parseSuiteSpec(json::parse(R"({"suites": ["chevalley"]})")); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(codeOf([] { parseSuiteSpec(json::parse(R"({"suites": []})")); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(codeOf([] {
              parseSuiteSpec(json::parse(R"({"group": {"type": "A2"}, "suites": ["fixedgroup"]})"));
            }),
            ErrorCode::InvalidSpec);
  EXPECT_EQ(codeOf([] {
              parseSuiteSpec(json::parse(R"({"group": {"type": "Z", "rank": 2}, "suites": ["chevalley"]})"));
            }),
            ErrorCode::InvalidSpec);
  EXPECT_EQ(codeOf([] {
              parseSuiteSpec(json::parse(R"({"group": {"type": "A2"}, "suites": ["chevalley"], "extra": 1})"));
            }),
            ErrorCode::InvalidSpec);
  EXPECT_EQ(codeOf([] { tomlToJson("suites = [\n"); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(codeOf([] { loadSuiteSpec(kFixtures / "missing.json"); }), ErrorCode::InvalidSpec);
}

TEST(Harness, TomlMatchesJson) {
  const auto toml = tomlToJson(R"(
suites = ["tits-welldef"]
[group]
type = "A"
rank = 1
isogeny = "sc"
)");
  const auto fromJson = loadSuiteSpec(kFixtures / "a1_tits.json");
  EXPECT_EQ(specHash(parseSuiteSpec(toml)), specHash(fromJson));
}

TEST(Harness, DeterministicReports) {
  const auto spec = loadSuiteSpec(kFixtures / "full.toml");
  const auto a = runSuite(spec, {7, false}).toJson().dump();
  const auto b = runSuite(spec, {7, false}).toJson().dump();
  EXPECT_EQ(a, b);
  const auto rep = runSuite(spec, {7, false});
  EXPECT_EQ(rep.seed, 7u);
  EXPECT_EQ(rep.exitCode(), 0) << rep.toJson().dump(1);
  EXPECT_TRUE(std::is_sorted(rep.records.begin(), rep.records.end(),
                             [](const CheckRecord& x, const CheckRecord& y) { return x.id < y.id; }));
}

TEST(Harness, MissingModelIsSkipped) {
  const auto spec = parseSuiteSpec(json::parse(R"({"group": {"type": "G2"}, "suites": ["chevalley"]})"));
  const auto rep = runSuite(spec);
  EXPECT_EQ(rep.records[0].status, CheckStatus::Skipped);
  EXPECT_EQ(rep.exitCode(), 0);
}

TEST(Harness, ExplicitSplcngData) {
  const auto spec = parseSuiteSpec(json::parse(R"({
    "group": {"type": "A", "rank": 1, "isogeny": "sc"},
    "gamma": {"order": 2, "weyl": [1]},
    "coeff": {"N": 24, "symbols": ["x"], "symbolImages": {"x": {"zeta": 12, "free": {"x": 1}}}},
    "data": {"adata": [{"free": {"x": 1}}, {"zeta": 12, "free": {"x": 1}}],
             "scaling": [{"free": {"c": 1}}, {"free": {"c": 1}}]},
    "suites": ["splcng"]
  })"));
  const auto rep = runSuite(spec);
  EXPECT_EQ(rep.records[0].status, CheckStatus::Pass) << rep.toJson().dump();
}

TEST(Harness, InvalidExplicitDataFails) {
  const auto spec = parseSuiteSpec(json::parse(R"({
    "group": {"type": "A1"},
    "data": {"adata": [{"zeta": 6}, {"zeta": 6}]},
    "suites": ["splcng"]
  })"));
  const auto rep = runSuite(spec);
  EXPECT_EQ(rep.records[0].status, CheckStatus::Fail);
  EXPECT_EQ(rep.exitCode(), 1);
}

TEST(Harness, ExplicitLattice) {
  const auto spec = parseSuiteSpec(json::parse(R"({
    "gamma": {"lattice": [[[0, 1], [1, 0]]]},
    "suites": ["coinvariants"]
  })"));
  const auto rep = runSuite(spec);
  EXPECT_EQ(rep.records[0].status, CheckStatus::Pass);
  EXPECT_EQ(rep.records[0].witness.at("coinvariants").at("freeRank"), 1);
}

TEST(Harness, TimingsOnlyWhenRequested) {
  const auto spec = loadSuiteSpec(kFixtures / "a1_tits.json");
  EXPECT_EQ(runSuite(spec).records[0].runtimeMs, 0.0);
}

}  // namespace
}  // namespace lgk
