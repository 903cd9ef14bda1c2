#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "qgroups/scenarios.hpp"

using namespace qg;

namespace {
std::string serialize(const ScenarioReport& r) {
    std::ostringstream os;
    r.serialize(os);
    return os.str();
}
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("fast scenarios pass") {
    ScenarioContext ctx;
    for (const char* name : {"q111-star", "q211", "q221-tc", "q221-matrix", "u6-order",
                             "nsub-verify-rel1", "nsub-verify-rel2", "nsub-verify-rel3",
                             "main-theorem-report"}) {
        ScenarioReport rep = run_scenario(name, ctx);
        INFO(serialize(rep));
        CHECK(rep.pass());
    }
}

TEST_CASE("reports are deterministic across fresh contexts") {
    std::ostringstream a, b;
    for (const char* name : {"q111-star", "q221-tc", "nsub-verify-rel3", "nsub-verify-rel1"}) {
        ScenarioContext ctx1, ctx2;
        run_scenario(name, ctx1).serialize(a);
        run_scenario(name, ctx2).serialize(b);
    }
    CHECK(a.str() == b.str());
}

TEST_CASE("reports match their golden copies") {
    ScenarioContext ctx;
    for (const char* name : {"q111-star", "q221-tc", "nsub-verify-rel1", "nsub-verify-rel3"}) {
        INFO(name);
        std::string got = serialize(run_scenario(name, ctx));
        std::string want = slurp(std::string(QGROUPS_GOLDEN_DIR) + "/" + name + ".report");
        CHECK(got == want);
    }
}

TEST_CASE("report serialization carries tags and refs for every check") {
    ScenarioContext ctx;
    ScenarioReport rep = run_scenario("nsub-verify-rel3", ctx);
    for (const Check& c : rep.checks) {
        INFO(c.name);
        CHECK_FALSE(c.tag.empty());
        CHECK_FALSE(c.ref.empty());
        CHECK((c.tag == "source" || c.tag == "trivial" || c.tag == "derived"));
    }
    std::string s = serialize(rep);
    CHECK(s.find("scenario: nsub-verify-rel3") == 0);
    CHECK(s.find("summary: pass") != std::string::npos);
}

TEST_CASE("unknown scenario names are rejected") {
    ScenarioContext ctx;
    CHECK_THROWS_AS(run_scenario("nope", ctx), std::invalid_argument);
}
