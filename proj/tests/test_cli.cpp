#include "cli.hpp"
#include "doctest.h"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace nichols;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* a2 = R"({"theta":2,"N":5,"exps":[[1,4],[0,1]]})";
const char* plane = R"({"theta":2,"N":2,"exps":[[1,1],[0,1]]})";

}  // namespace

TEST_CASE("cartan subcommand") {
    auto r = run({"cartan", "--json"}, a2);
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["cartan"] == json::parse("[[2,-1],[-1,2]]"));
    CHECK(j["cartan_vertex"] == json::parse("[true,true]"));

    r = run({"cartan", "--json"}, R"({"theta":1,"N":2,"exps":[[1]]})");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["cartan"] == json::parse("[[2]]"));
}

TEST_CASE("input errors exit with code 1") {
    CHECK(run({"cartan"}, "{not json").code == 1);
    CHECK(run({"cartan"}, R"({"theta":3,"N":5,"exps":[[1,4],[0,1]]})").code == 1);
    CHECK(run({"cartan"}, R"({"N":0,"exps":[[1]]})").code == 1);
    CHECK(run({"cartan"}, R"({"N":5,"exps":[[1,4],[0]]})").code == 1);
    CHECK(run({"frobnicate"}, a2).code == 1);
    CHECK(run({"cartan", "/nonexistent/input.json"}, "").code == 1);
}

TEST_CASE("infinite root systems exit with code 2") {
    // q11 = q22 = 1 gives m_12 = infinity
    auto r = run({"cartan"}, R"({"N":5,"exps":[[0,1],[0,0]]})");
    CHECK(r.code == 2);
    CHECK(r.err.find("not finite") != std::string::npos);
}

TEST_CASE("roots subcommand") {
    auto r = run({"roots", "--json"}, a2);
    REQUIRE(r.code == 0);
    auto roots = json::parse(r.out)["roots"];
    REQUIRE(roots.size() == 3);
    for (const auto& x : roots) {
        CHECK(x["N"] == 5);
        CHECK(x["in_orbit"] == true);
    }
    CHECK(roots[2]["root"] == json::parse("[1,1]"));
    CHECK(roots[2]["q"]["exponent"] == 1);
}

TEST_CASE("relations subcommand") {
    auto r = run({"relations", "--json"}, plane);
    REQUIRE(r.code == 0);
    auto rels = json::parse(r.out)["relations"];
    REQUIRE(rels.size() == 3);
    for (const auto& x : rels) CHECK(x["status"] == "verified");
    CHECK(rels[2]["family"] == "MinusOneSquare");
    CHECK(rels[2]["element"].size() == 4);

    r = run({"relations", "--json", "--general"}, a2);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["general"].size() == 2);
}

TEST_CASE("hilbert subcommand and the degree cap") {
    auto r = run({"hilbert", "--json", "--max-degree", "5"}, plane);
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    std::map<int, int> by_total;
    for (const auto& row : j["rows"]) {
        CHECK(row["match"] == true);
        int t = 0;
        for (int d : row["degree"]) t += d;
        by_total[t] += row["gram_dim"].get<int>();
    }
    CHECK(by_total == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}, {5, 0}});

    setenv("NICHOLS_MAX_DEGREE", "3", 1);
    CHECK(json::parse(run({"hilbert", "--json"}, plane).out)["max_degree"] == 3);
    CHECK(json::parse(run({"hilbert", "--json", "--max-degree", "2"}, plane).out)["max_degree"] == 2);
    setenv("NICHOLS_MAX_DEGREE", "x", 1);
    CHECK(run({"hilbert"}, plane).code == 1);
    unsetenv("NICHOLS_MAX_DEGREE");
    CHECK(json::parse(run({"hilbert", "--json"}, R"({"N":2,"exps":[[1,1],[0,1]],"caps":{"max_degree":4}})").out)["max_degree"] == 4);
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "--max-degree", "6"}, R"({"N":4,"exps":[[1,3],[0,1]]})");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);

    // a budget too small to decide the powers of root vectors
    r = run({"verify", "--max-degree", "4", "--max-dim", "2"}, R"({"N":4,"exps":[[1,3],[0,1]]})");
    CHECK(r.code == 3);
    CHECK(r.out.find("FAIL relations") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    for (const char* cmd : {"cartan", "roots", "relations", "hilbert"}) {
        auto a = run({cmd, "--json"}, a2), b = run({cmd, "--json"}, a2);
        CHECK(a.out == b.out);
    }
}
