#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "triseq/cli.hpp"

using namespace triseq;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand point") {
    Run r = run({"expand", "--point", "4/7,2/7"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["digits"] == json::array({1, 2}));
    CHECK(j["terminated"] == true);
    CHECK(j["terminated_at"] == 2);
    CHECK(j["d_trace"] == json::array({"1/7", "0"}));
    CHECK(j["terminal_point"]["x"] == "1/2");
    CHECK(j["terminal_point"]["y"] == "0");

    Run corner = run({"expand", "--point", "1,1"});
    REQUIRE(corner.code == 0);
    CHECK(json::parse(corner.out)["digits"] == json::array({0}));

    Run csv = run({"expand", "--point", "4/7,2/7", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "index,digit,d\n0,1,1/7\n1,2,0\n");
}

TEST_CASE("expand rejects points outside the domain") {
    Run r = run({"expand", "--point", "3,2"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());

    CHECK(run({"expand", "--point", "1/2,1/4", "--interval",
               "0.5:0.6,0.2:0.3"}).code == 2);
    CHECK(run({"expand"}).code == 2);
    CHECK(run({"expand", "--point", "not-a-point"}).code == 2);
}

TEST_CASE("expand interval ambiguity") {
    Run r = run({"expand", "--interval", "0.6:0.7,0.35:0.45"});
    REQUIRE(r.code == 3);
    json j = json::parse(r.out);
    CHECK(j["ambiguous"] == true);
    CHECK(j["step"] == 0);

    Run deeper = run({"expand", "--interval", "0.543:0.545,0.332:0.334"});
    REQUIRE(deeper.code == 3);
    CHECK(json::parse(deeper.out)["step"] == 3);

    Run pinned =
        run({"expand", "--interval", "0.543:0.545,0.332:0.334", "--depth", "1"});
    REQUIRE(pinned.code == 0);
    CHECK(json::parse(pinned.out)["digits"] == json::array({1}));
}

TEST_CASE("vertices") {
    Run r = run({"vertices", "--seq", "0"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.size() == 1);
    json v = j[0]["vertices"];
    CHECK(v[0] == json({{"x", "1"}, {"y", "0"}}));
    CHECK(v[1] == json({{"x", "1"}, {"y", "1"}}));
    CHECK(v[2] == json({{"x", "1/2"}, {"y", "1/2"}}));

    Run two = run({"vertices", "--seq", "1,2", "--format", "csv"});
    REQUIRE(two.code == 0);
    CHECK(two.out.find("2,1/2,1/2,3/5,1/5,2/3,1/6") != std::string::npos);

    Run svg = run({"vertices", "--seq", "1,2", "--format", "svg"});
    REQUIRE(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(svg.out.rfind("</svg>\n") == svg.out.size() - 7);

    CHECK(run({"vertices", "--seq", ""}).code == 2);
    CHECK(run({"vertices"}).code != 0);
}

TEST_CASE("classify") {
    Run p2 = run({"classify", "--family", "pow2"});
    REQUIRE(p2.code == 0);
    json j = json::parse(p2.out);
    CHECK(j["verdict"] == "non-unique");
    bool has_tail_rule = false;
    for (const json& e : j["evidence"])
        if (e["rule"] == "positive-tail-product") has_tail_rule = true;
    CHECK(has_tail_rule);

    Run lin = run({"classify", "--family", "linear"});
    REQUIRE(lin.code == 0);
    CHECK(json::parse(lin.out)["verdict"] == "unique");

    CHECK(run({"classify", "--family", "file:/nonexistent.txt"}).code == 2);
    CHECK(run({"classify", "--family", "nosuch"}).code == 2);
}

TEST_CASE("segment") {
    Run seg = run({"segment", "--family", "pow2", "--depth", "40"});
    REQUIRE(seg.code == 0);
    json j = json::parse(seg.out);
    CHECK(j["kind"] == "segment");
    CHECK(j["length_lower_bound"].get<double>() > 0.0);

    Run pt = run({"segment", "--family", "const:1", "--depth", "40"});
    REQUIRE(pt.code == 0);
    CHECK(json::parse(pt.out)["kind"] == "point");

    // Terminated digits without a landing point: the whole pulled-back
    // terminal segment is reported exactly.
    Run fin = run({"segment", "--seq", "1,2!"});
    REQUIRE(fin.code == 0);
    json jf = json::parse(fin.out);
    CHECK(jf["kind"] == "segment");
    CHECK(jf["even_residual2"] == "0");
    CHECK(jf["odd_residual2"] == "0");

    CHECK(run({"segment", "--family", "pow2", "--seq", "1,2"}).code == 2);
    CHECK(run({"segment"}).code == 2);
}

TEST_CASE("cf") {
    Run r = run({"cf", "--alpha", "2/5"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["digits"] == json::array({2, 2}));
    CHECK(j["reconstructed"] == "2/5");

    CHECK(run({"cf", "--alpha", "0"}).code == 2);
    CHECK(run({"cf", "--alpha", "3/2"}).code == 2);
}

TEST_CASE("ball") {
    Run tri = run({"ball", "--center", "1/2,1/4", "--eps", "1/10"});
    REQUIRE(tri.code == 0);
    json j = json::parse(tri.out);
    CHECK(j["contained"] == true);
    CHECK_FALSE(j["prefix"].empty());

    Run edge = run({"ball", "--center", "1/2,1/4", "--eps", "1/10", "--edge"});
    REQUIRE(edge.code == 0);
    CHECK(json::parse(edge.out)["meets_ball"] == true);

    CHECK(run({"ball", "--center", "1/3,1/2", "--eps", "1/10"}).code == 2);
    CHECK(run({"ball", "--center", "1/2,1/4", "--eps", "0"}).code == 2);
}

TEST_CASE("ball honors the budget override") {
    setenv("TRISEQ_BUDGET", "4", 1);
    Run r = run({"ball", "--center", "1/2,1/4", "--eps", "1/1000"});
    unsetenv("TRISEQ_BUDGET");
    CHECK(r.code == 4);
    CHECK_FALSE(r.err.empty());

    setenv("TRISEQ_BUDGET", "abc", 1);
    Run bad = run({"ball", "--center", "1/2,1/4", "--eps", "1/10"});
    unsetenv("TRISEQ_BUDGET");
    CHECK(bad.code == 2);
}

TEST_CASE("mixing") {
    Run r = run({"mixing", "--a", "0", "--b", "1", "--gap", "2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["power"] == 3);
    CHECK(j["concatenated"] == json::array({0, 0, 0, 1}));
    CHECK(j["all_passed"] == true);
    for (const json& s : j["samples"]) CHECK(s["passed"] == true);
}

TEST_CASE("output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"expand", "--point", "4/7,2/7"},
          std::vector<std::string>{"classify", "--family", "pow2"},
          std::vector<std::string>{"ball", "--center", "1/2,1/4", "--eps",
                                   "1/10"}}) {
        Run a = run(args);
        Run b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        // JSON output re-parses to the same value.
        CHECK(json::parse(a.out) == json::parse(b.out));
    }
}

TEST_CASE("unknown subcommand fails") {
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({}).code != 0);
}
