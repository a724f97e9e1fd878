#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
namespace cli = domcover::cli;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    args.push_back("--json");
    Run r = run(args);
    REQUIRE(r.status == cli::exit_ok);
    return json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name, const std::string& contents)
{
    auto p = std::filesystem::temp_directory_path() / ("domcover_test_" + name);
    std::ofstream(p) << contents;
    return p;
}

bool keys_sorted(const json& j)
{
    if (j.is_array())
        return std::all_of(j.begin(), j.end(), keys_sorted);
    if (!j.is_object())
        return true;
    std::string prev;
    bool first = true;
    for (auto& [k, v] : j.items()) {
        if (!first && k < prev)
            return false;
        prev = k;
        first = false;
        if (!keys_sorted(v))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("cover on a path")
{
    json j = run_json({"cover", "--family", "path", "--params", "n=7", "--witness"});
    CHECK(j["command"] == "cover");
    CHECK(j["results"]["size"] == 3);
    CHECK(j["results"]["cover_min"] == 4);
    CHECK(j["results"]["cover_max"] == 6);
    CHECK(j["results"]["witness_min"] == json({0, 3, 6}));
    CHECK(j["input"]["family"] == "path");
    CHECK(keys_sorted(j));
    CHECK_FALSE(j.contains("timing"));
}

TEST_CASE("tree and block subcommands")
{
    json t = run_json({"tree", "--family", "path", "--params", "n=6", "--objective", "min"});
    CHECK(t["results"]["size"] == 2);
    CHECK(t["results"]["cover"] == 4);

    json b = run_json({"block", "--family", "corona", "--params", "p=3", "--objective", "max", "--witness"});
    CHECK(b["results"]["cover"] == 9);
    CHECK(b["results"]["witness"] == json({0, 1, 2}));

    Run text = run({"tree", "--family", "star", "--params", "n=5"});
    CHECK(text.status == 0);
    CHECK(text.out.find("results.cover: 5") != std::string::npos);
}

TEST_CASE("validate-product from files")
{
    auto g = scratch("p3.el", "3 2\n0 1\n1 2\n");
    auto h = scratch("k2.el", "2 1\n0 1\n");
    json j = run_json({"validate-product", "--inputG", g.string(), "--inputH", h.string()});
    CHECK(j["results"]["min"]["agree"] == true);
    CHECK(j["results"]["min"]["formula"] == 5);
    CHECK(j["results"]["min"]["oracle"] == 5);
    CHECK(j["results"]["min"]["case"] == "gammaH_1");
    CHECK(j["results"]["gamma"]["agree"] == true);

    json p = run_json({"product", "--familyG", "complete", "--paramsG", "n=2", "--familyH", "path", "--paramsH", "n=4",
                       "--objective", "min"});
    CHECK(p["results"]["value"] == 10);
    CHECK(p["results"]["case"] == "mixed_case");
    std::filesystem::remove(g);
    std::filesystem::remove(h);
}

TEST_CASE("gen round-trips into bounds")
{
    Run gen = run({"gen", "--family", "random_block_graph", "--params", "n=11", "--seed", "9"});
    REQUIRE(gen.status == 0);
    auto file = scratch("gen.el", gen.out);
    json from_file = run_json({"bounds", "--input", file.string()});
    json from_family = run_json({"bounds", "--family", "random_block_graph", "--params", "n=11", "--seed", "9"});
    CHECK(from_file["results"] == from_family["results"]);
    std::filesystem::remove(file);
}

TEST_CASE("enum")
{
    json j = run_json({"enum", "--family", "cycle", "--params", "n=6"});
    CHECK(j["results"]["count"] == 3);
    CHECK(j["results"]["sets"] == json({{0, 3}, {1, 4}, {2, 5}}));
    json t = run_json({"enum", "--family", "path", "--params", "n=4", "--total"});
    CHECK(t["results"]["sets"] == json({{1, 2}}));
}

TEST_CASE("exit codes")
{
    CHECK(run({"frobnicate"}).status == cli::exit_usage);
    CHECK(run({}).status == cli::exit_usage);
    CHECK(run({"cover", "--bogus"}).status == cli::exit_usage);
    CHECK(run({"cover", "--family", "path", "--params", "n"}).status == cli::exit_usage);
    CHECK(run({"cover"}).status == cli::exit_usage);
    CHECK(run({"tree", "--family", "cycle", "--params", "n=5"}).status == cli::exit_domain);
    CHECK(run({"cover", "--family", "hypercube", "--params", "n=3"}).status == cli::exit_domain);
    CHECK(run({"cover", "--input", "/nonexistent/graph.el"}).status == cli::exit_domain);
    CHECK(run({"cover", "--family", "path", "--params", "n=40"}).status == cli::exit_capacity);

    auto bad = scratch("bad.el", "3 2\n0 1\n1 1\n");
    Run r = run({"cover", "--input", bad.string()});
    CHECK(r.status == cli::exit_domain);
    CHECK(r.err.find("line 3") != std::string::npos);
    std::filesystem::remove(bad);
}

TEST_CASE("identical inputs give identical bytes")
{
    const std::vector<std::vector<std::string>> commands{
        {"cover", "--family", "random_gnp", "--params", "n=12", "p_num=1", "p_den=3", "--seed", "5", "--json", "--witness"},
        {"bounds", "--family", "random_tree", "--params", "n=14", "--seed", "3", "--json"},
        {"gen", "--family", "random_block_graph", "--params", "n=40", "--seed", "8"},
    };
    for (const auto& c : commands)
        CHECK(run(c).out == run(c).out);

    json timed = run_json({"gamma", "--family", "path", "--params", "n=5", "--timing"});
    CHECK(timed.contains("timing"));
}
