#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nzf/cli.hpp"
#include "nzf/graph.hpp"
#include "nzf/io.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = nzf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("gen writes an edge list and round-trips") {
    auto path = temp_file("nzf_w5.json");
    CliRun r = run_cli({"gen", "wheel", "5", "--out", path.string()});
    CHECK(r.code == 0);
    nzf::Multigraph g = nzf::parse_graph(nzf::io::read_file(path.string()), nzf::GraphFormat::EdgeListJson);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 10);
    std::filesystem::remove(path);
}

TEST_CASE("verify rejects bridges with a machine-parsable reason") {
    auto gpath = temp_file("nzf_bridge.json");
    nzf::io::write_file(gpath.string(), R"({"n":2,"edges":[[0,1]]})");
    auto fpath = temp_file("nzf_bridge_flow.json");
    nzf::io::write_file(fpath.string(),
                        R"({"d":2,"graph":{"n":2,"edges":[[0,1]]},"values":[[1.0,0.0]]})");
    CliRun r = run_cli({"verify", "--graph", gpath.string(), "--flow", fpath.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("error: bridge") == 0);
    std::filesystem::remove(gpath);
    std::filesystem::remove(fpath);
}

TEST_CASE("verify accepts a constructed flow end to end") {
    auto fpath = temp_file("nzf_k33_flow.json");
    CliRun c = run_cli({"construct", "--graph", "k33", "--method", "bipartite", "--out", fpath.string()});
    REQUIRE(c.code == 0);
    CliRun v = run_cli({"verify", "--flow", fpath.string()});
    CHECK(v.code == 0);
    json report = json::parse(v.out);
    CHECK(report["strength"].get<double>() == doctest::Approx(2.0));
    CHECK(report.contains("tool_version"));
    std::filesystem::remove(fpath);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"minimize", "--graph", "k4", "--no-such-flag"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("unknown graph name is a domain error") {
    CliRun r = run_cli({"bound", "--graph", "nonexistent-graph-name"});
    CHECK(r.code == 1);
}

TEST_CASE("search-cdc reports exhaustion and timeout distinctly") {
    CliRun none = run_cli({"search-cdc", "--graph", "k4", "--k", "3"});
    CHECK(none.code == 0);
    json j = json::parse(none.out);
    CHECK(j["found"] == false);
    CHECK(j["exhausted"] == true);

    CliRun timeout = run_cli({"search-cdc", "--graph", "petersen", "--k", "5", "--budget", "2"});
    CHECK(timeout.code == 3);
    CHECK(timeout.err.find("error: timeout") == 0);
}

TEST_CASE("minimize emits a full report with config echo") {
    auto path = temp_file("nzf_rep.json");
    CliRun r = run_cli({"minimize", "--graph", "k4", "--starts", "8", "--seed", "3", "--out", path.string()});
    REQUIRE(r.code == 0);
    json j = json::parse(nzf::io::read_file(path.string()));
    CHECK(j["best_strength"].get<double>() == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-3));
    CHECK(j["config"]["starts"] == 8);
    CHECK(j["seed"] == 3);
    CHECK(j["flow"]["values"].size() == 6);
    std::filesystem::remove(path);
}

TEST_CASE("triangulate renders svg or json by extension") {
    auto fpath = temp_file("nzf_pet_flow.json");
    REQUIRE(run_cli({"construct", "--method", "petersen", "--out", fpath.string()}).code == 0);
    auto svg_path = temp_file("nzf_pet.svg");
    CliRun r = run_cli({"triangulate", "--flow", fpath.string(), "--out", svg_path.string()});
    CHECK(r.code == 0);
    std::string svg = nzf::io::read_file(svg_path.string());
    CHECK(svg.find("<svg") == 0);
    auto json_path = temp_file("nzf_pet_tri.json");
    CliRun rj = run_cli({"triangulate", "--flow", fpath.string(), "--out", json_path.string()});
    CHECK(rj.code == 0);
    json tj = json::parse(nzf::io::read_file(json_path.string()));
    CHECK(tj["triangles"].size() == 10);
    CHECK(tj["side_map"].size() == 30);
    std::filesystem::remove(fpath);
    std::filesystem::remove(svg_path);
    std::filesystem::remove(json_path);
}

TEST_CASE("graph6 input path works with --format") {
    auto gpath = temp_file("nzf_k4.g6");
    nzf::io::write_file(gpath.string(), "C~\n");
    CliRun r = run_cli({"bound", "--graph", gpath.string(), "--format", "graph6"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["lower_bound"].get<double>() == doctest::Approx(1.0 + std::sqrt(2.0)));
    std::filesystem::remove(gpath);
}
