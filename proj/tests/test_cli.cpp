#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nvcat/cli.hpp"
#include "support.hpp"

#include <fstream>

using nlohmann::json;
using nvcat::CommandResult;
using nvcat::run_cli;

namespace {

CommandResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "nvcat");
    return run_cli(args);
}

std::string scratch(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("nvcat_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string input(const std::string& name) { return testkit::corpus_path(name); }

}  // namespace

TEST_CASE("validate") {
    auto r = run({"validate", input("c3")});
    CHECK(r.exit_code == 0);
    CHECK(r.output == "ok: true\nperiods generator: 1, lambda: 1\n");

    r = run({"validate", input("c3_double"), "--json"});
    auto j = json::parse(r.output);
    CHECK(j.at("ok") == true);
    CHECK(j.at("periods") == 2);
    CHECK(j.at("lambda") == 2);

    r = run({"validate", input("torus_exact")});
    CHECK(r.output == "ok: true\nperiods generator: 0, lambda: none\n");

    auto bad = scratch("bad.json", R"({"vertices":3,"maximal_simplices":[[0,1,2]],"xi":[{"edge":[0,1],"value":1},{"edge":[1,2],"value":1},{"edge":[0,2],"value":1}]})");
    r = run({"validate", bad, "--json"});
    CHECK(r.exit_code == 2);
    j = json::parse(r.output);
    CHECK(j.at("ok") == false);
    CHECK(j.at("violations").size() == 1);

    r = run({"bound", bad, "--json"});
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.output).at("error") == "xi is not a cocycle");
}

TEST_CASE("malformed invocations") {
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"cover", "/nonexistent/input.json"}).exit_code == 2);
    CHECK(run({"cover", scratch("junk.json", "{ not json")}).exit_code == 2);
    CHECK(run({"bound", input("genus2"), "--field", "fp:4"}).exit_code == 2);
    CHECK(run({"bound", input("genus2"), "--max-r", "-1"}).exit_code == 2);
    CHECK(run({"bound", input("genus2"), "--survivor-order", "0"}).exit_code == 2);
    CHECK(run({"bound", input("mapping_torus_deg2"), "--a", "1/2"}).exit_code == 2);
    CHECK(run({"cohom", input("c3"), "--a", "0"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("cover and supp") {
    auto r = run({"supp", input("mapping_torus_deg2"), "--json"});
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.output);
    CHECK(j.at("supp") == json::array({"1", "1/2"}));
    CHECK(j.at("degrees")[1].at("invariant_factors") == json::array({"t-2"}));

    r = run({"cover", input("genus2")});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("free_rank: 2") != std::string::npos);

    r = run({"cover", input("torus_exact")});
    CHECK(r.exit_code == 2);
    CHECK(r.error.find("exact") != std::string::npos);

    r = run({"supp", input("mapping_torus_deg2"), "--json", "--field", "fp:7"});
    CHECK(json::parse(r.output).at("supp") == json::array({"1", "4"}));
}

TEST_CASE("cohom") {
    auto r = run({"cohom", input("torus"), "--json"});
    auto j = json::parse(r.output);
    CHECK(j.at("dims") == json::array({0, 0, 0}));
    r = run({"cohom", input("torus"), "--json", "--a", "1"});
    CHECK(json::parse(r.output).at("dims") == json::array({1, 2, 1}));
    r = run({"cohom", input("mapping_torus_deg2"), "--json", "--a", "2"});
    CHECK(json::parse(r.output).at("dims") == json::array({0, 1, 1}));
    // F_3 has no value outside {1, 1/2} and their inverses
    r = run({"cohom", input("mapping_torus_deg2"), "--field", "fp:3"});
    CHECK(r.exit_code == 3);
}

TEST_CASE("bound and replay") {
    auto r = run({"bound", input("genus2")});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("best bound: cat(X,xi) >= 1\n", 0) == 0);

    auto a = run({"bound", input("genus2"), "--json", "--seed", "2"});
    auto b = run({"bound", input("genus2"), "--json", "--seed", "2"});
    CHECK(a.output == b.output);
    auto j = json::parse(a.output);
    CHECK(j.at("best_bound") == 1);
    CHECK(j.at("context").at("seed") == 2);

    auto path = scratch("bound.json", a.output);
    r = run({"replay", input("genus2"), path});
    CHECK(r.exit_code == 0);
    r = run({"replay", input("genus2"), path, "--json"});
    CHECK(json::parse(r.output).at("ok") == true);

    j["bounds"][0]["certificate"]["a"] = "1";
    r = run({"replay", input("genus2"), scratch("tampered.json", j.dump())});
    CHECK(r.exit_code == 2);

    auto report = run({"report", input("genus2"), "--json"});
    REQUIRE(report.exit_code == 0);
    auto full = json::parse(report.output);
    for (const char* key : {"validation", "cover", "supp", "cohomology", "bound"}) CHECK(full.contains(key));
    CHECK(run({"replay", input("genus2"), scratch("report.json", report.output)}).exit_code == 0);

    r = run({"bound", input("torus_exact"), "--json"});
    CHECK(json::parse(r.output).at("best_bound") == 3);
}
