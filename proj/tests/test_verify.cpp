#include <gtest/gtest.h>

#include "schubcone/errors.hpp"
#include "schubcone/verify.hpp"

using namespace schubcone;

namespace {

SuiteReport run(const char* suite, const char* type, SuiteConfig cfg = {}) {
    return run_suite(suite, RootSystemSpec::parse(type), cfg);
}

}  // namespace

TEST(Verify, FixturesB2) {
    auto r = run("paper-examples", "B2");
    EXPECT_TRUE(r.pass());
    EXPECT_GE(r.checked, 6u);
}

TEST(Verify, ConesA2CountsBruhatPairs) {
    auto r = run("cones", "A2");
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.checked, 19u);
}

TEST(Verify, ReducedIsoD4) {
    auto r = run("reduced-iso", "D4");
    EXPECT_TRUE(r.pass());
    EXPECT_GE(r.checked, 192u);
}

TEST(Verify, DeterministicAcrossJobs) {
    SuiteConfig a, b;
    b.jobs = 3;
    auto ra = run("reduced-iso", "B3", a), rb = run("reduced-iso", "B3", b);
    EXPECT_EQ(ra.checked, rb.checked);
    EXPECT_EQ(ra.counters, rb.counters);
    SuiteConfig c;
    c.seed = 5;
    EXPECT_NE(run("reduced-iso", "B3", c).counters.at("positions"), 0);
}

TEST(Verify, Errors) {
    EXPECT_THROW(run("nope", "A2"), Error);
    EXPECT_THROW(run("classical-indec", "G2"), Error);
    SuiteConfig cfg;
    cfg.max_order = 10;
    EXPECT_THROW(run("cones", "A3", cfg), GuardExceeded);
}

TEST(Verify, ExploreAssertsNothing) {
    auto r = run("exceptional-explore", "G2");
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.checked, 12u);
    EXPECT_GT(r.counters.at("rationally_decomposable"), 0);
}

TEST(Verify, ReportJson) {
    auto r = run("character", "A2");
    auto j = report_json(r);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["suite"], "character");
    EXPECT_EQ(j["type"], "A2");
    EXPECT_EQ(j["checked"], 19);
    EXPECT_TRUE(j["violations"].empty());
    EXPECT_TRUE(j.contains("seed"));
    EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Verify, SuiteNames) {
    const auto& n = suite_names();
    for (const char* s : {"reduced-iso", "demazure", "cones", "classical-indec", "allin", "main", "smooth",
                          "paper-examples", "exceptional-explore", "character"})
        EXPECT_NE(std::find(n.begin(), n.end(), s), n.end()) << s;
}
