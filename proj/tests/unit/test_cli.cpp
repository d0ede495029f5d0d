#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bc/cli.hpp"
#include "bc/io.hpp"
#include "bc/number.hpp"

using namespace bc;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "bc_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = (dir / name).string();
    std::ofstream(path) << content;
    return path;
}

json ok_json(const std::vector<std::string>& args) {
    auto o = run(args);
    INFO("args: " << args.front() << " stderr: " << o.err);
    REQUIRE(o.code == 0);
    return json::parse(o.out);
}

std::vector<std::string> coeffs(const json& poly) { return poly["coeffs"].get<std::vector<std::string>>(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute examples") {
    auto k3 = scratch("k3.json", R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]})");
    auto r = ok_json({"compute", "graph-chromatic", k3, "--method", "broken_circuit"});
    CHECK(coeffs(r["polynomial"]) == std::vector<std::string>{"0", "2", "-3", "1"});
    CHECK(r["b"] == json::array({1, 3, 2, 0}));
    CHECK(coeffs(ok_json({"graph", "chromatic", k3, "--method", "full"})["polynomial"]) ==
          std::vector<std::string>{"0", "2", "-3", "1"});

    auto b3 = run({"generate", "boolean-lattice", "--n", "3"});
    REQUIRE(b3.code == 0);
    auto b3file = scratch("b3.json", b3.out);
    CHECK(ok_json({"compute", "lattice-mobius", b3file})["mu"] == "-1");
    CHECK(ok_json({"lattice", "mobius", b3file, "--method", "crosscut"})["mu"] == "-1");
    CHECK(ok_json({"lattice", "mobius", b3file, "--method", "blass-sagan"})["mu"] == "-1");

    auto z = ok_json({"compute", "number-zeta", "--s", "2", "--prime-bound", "13"});
    CHECK(z["value"].get<double>() == doctest::Approx(0.618078425071).epsilon(1e-12));
    CHECK(z["primes"] == 6);

    auto t = ok_json({"number", "totient", "--n", "12", "--h", "power:-1", "--method", "product"});
    CHECK(t["value"] == "1/6");
    CHECK(ok_json({"number", "totient", "--n", "12", "--h", "power:-1"})["value"] == "1/6");
}

TEST_CASE("generate examples") {
    auto grid = ok_json({"generate", "grid", "--m", "2", "--n", "3"});
    CHECK(grid["kind"] == "hypergraph");
    CHECK(grid["circuits"].size() == 1);
    CHECK(grid["edges"].size() == 3);
    CHECK(grid["seed"] == 7);

    auto u = ok_json({"generate", "uniform-matroid", "--r", "2", "--n", "3"});
    CHECK(u["uniform"] == json::array({2, 3}));
    auto ufile = scratch("u23.json", u.dump());
    CHECK(coeffs(ok_json({"matroid", "characteristic", ufile})["polynomial"]) == std::vector<std::string>{"2", "-3", "1"});
    for (auto m : {"full", "broken_circuit", "derivative"})
        CHECK(ok_json({"matroid", "beta", ufile, "--method", m})["beta"] == "1");

    auto b3 = ok_json({"generate", "boolean-lattice", "--n", "3"});
    CHECK(b3["elements"].size() == 8);
    CHECK(b3["covers"].size() == 12);

    auto g1 = ok_json({"generate", "random-graph", "--n", "7", "--seed", "11"});
    auto g2 = ok_json({"generate", "random-graph", "--n", "7", "--seed", "11"});
    CHECK(g1 == g2);
    CHECK(g1["seed"] == 11);
}

TEST_CASE("round trip: generate, serialize, parse, compute") {
    struct Case {
        std::vector<std::string> gen;
        std::vector<std::string> compute;  // file goes after the kind
        std::function<json(const json&)> reserialize;
    };
    std::vector<Case> cases{
        {{"generate", "grid", "--m", "2", "--n", "4"},
         {"compute", "hypergraph-chromatic"},
         [](const json& j) {
             auto h = io::parse_hypergraph(j);
             return io::hypergraph_json(h.hypergraph, &*h.circuits);
         }},
        {{"generate", "graph", "--name", "C5"}, {"compute", "graph-domination"}, [](const json& j) {
             return io::graph_json(io::parse_graph(j));
         }},
        {{"generate", "random-graph", "--n", "6", "--seed", "3"}, {"compute", "graph-chromatic"}, [](const json& j) {
             return io::graph_json(io::parse_graph(j));
         }},
        {{"generate", "partition-lattice", "--n", "4"}, {"compute", "lattice-crosscut"}, [](const json& j) {
             return io::lattice_json(io::parse_lattice(j).lattice);
         }},
        {{"generate", "geometry", "--n", "5", "--variant", "points", "--seed", "9"},
         {"compute", "geometry-verify"},
         [](const json& j) {
             auto g = io::parse_geometry(j);
             return io::geometry_json(g.elements, ClosureSystem(static_cast<int>(g.elements.size()), g.closed));
         }},
        {{"generate", "complete-hypergraph", "--n", "5", "--r", "3"}, {"compute", "hypergraph-chromatic"}, [](const json& j) {
             return io::hypergraph_json(io::parse_hypergraph(j).hypergraph);
         }},
        {{"generate", "core", "--n", "9", "--seed", "5"}, {"compute", "core-sum"}, [](const json& j) { return j; }},
    };
    int i = 0;
    for (const auto& c : cases) {
        auto gen = run(c.gen);
        REQUIRE(gen.code == 0);
        json parsed = json::parse(gen.out);
        auto direct = scratch("rt_direct_" + std::to_string(i) + ".json", gen.out);
        json again = c.reserialize(parsed);
        again["seed"] = parsed["seed"];
        CHECK(again == parsed);
        auto reparsed = scratch("rt_again_" + std::to_string(i++) + ".json", again.dump());
        auto args_a = c.compute, args_b = c.compute;
        args_a.push_back(direct);
        args_b.push_back(reparsed);
        auto a = run(args_a), b = run(args_b);
        INFO(c.gen[1] << ": " << a.err);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("permuting the order leaves the sums unchanged") {
    auto core = scratch("core.json", run({"generate", "core", "--n", "8", "--seed", "3"}).out);
    auto a = ok_json({"core", "sum", core});
    auto b = ok_json({"core", "sum", core, "--permute-order", "7,6,5,4,3,2,1,0"});
    CHECK(a["full"] == b["full"]);
    CHECK(a["pruned"] == a["full"]);
    CHECK(b["pruned"] == b["full"]);

    auto g = scratch("rg.json", run({"generate", "random-graph", "--n", "5", "--seed", "2", "--p", "0.7"}).out);
    auto p0 = ok_json({"graph", "chromatic", g});
    const int m = static_cast<int>(json::parse(std::ifstream(g))["edges"].size());
    std::string rev;
    for (int e = m - 1; e >= 0; --e) rev += std::to_string(e) + (e ? "," : "");
    auto p1 = ok_json({"graph", "chromatic", g, "--permute-order", rev});
    CHECK(p0["polynomial"] == p1["polynomial"]);
    CHECK(p0["b"] == p1["b"]);
}

TEST_CASE("exit codes and streams") {
    auto k3 = scratch("k3b.json", R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]})");
    auto unknown_field = scratch("uf.json", R"({"vertices":["a"],"edges":[],"colour":1})");
    auto wrong_kind = scratch("wk.json", R"({"kind":"lattice","vertices":["a"],"edges":[]})");
    auto looped = scratch("loop.json", R"({"vertices":["a"],"edges":[["a","a"]]})");
    auto bad_fn = scratch("badfn.json",
                          R"({"elements":["a","b","c"],"circuits":[["a","b","c"]],"function":{"kind":"table","default":1}})");
    auto bare = scratch("bare.json", R"({"elements":["a","b"],"broken":[["a"]],"function":{"kind":"closure"}})");
    auto not_broken = scratch(
        "nb.json", R"({"elements":["a","b","c"],"circuits":[["a","b","c"]],"broken":[["b","c"]],"function":{"kind":"closure"}})");

    struct Expect {
        std::vector<std::string> args;
        int code;
    };
    std::vector<Expect> table{
        {{"compute", "graph-chromatic", unknown_field}, cli::kSchemaError},
        {{"compute", "graph-chromatic", wrong_kind}, cli::kSchemaError},
        {{"compute", "graph-chromatic", "/nonexistent/file.json"}, cli::kSchemaError},
        {{"compute", "no-such-kind", k3}, cli::kSchemaError},
        {{"compute", "graph-chromatic", k3, "--method", "magic"}, cli::kSchemaError},
        {{"compute", "graph-chromatic", k3, "--no-such-flag"}, cli::kSchemaError},
        {{"compute", "graph-chromatic", k3, "--permute-order", "0,0,1"}, cli::kSchemaError},
        {{"core", "sum", bare}, cli::kSchemaError},
        {{"generate", "grid", "--m", "4", "--n", "4"}, cli::kCapExceeded},
        {{"compute", "graph-chromatic", k3, "--cap-elements", "2"}, cli::kCapExceeded},
        {{"number", "mobius", "--n", "2000000"}, cli::kCapExceeded},
        {{"compute", "graph-chromatic", looped}, cli::kPrecondition},
        {{"number", "mobius", "--n", "7"}, cli::kPrecondition},
        {{"core", "sum", bad_fn}, cli::kPrecondition},
        {{"core", "sum", not_broken}, cli::kPrecondition},
        {{"hypergraph", "chromatic", k3, "--circuits", "rect"}, cli::kPrecondition},
    };
    for (const auto& e : table) {
        auto o = run(e.args);
        INFO(e.args[0] << " " << e.args[1] << " -> " << o.err);
        CHECK(o.code == e.code);
        CHECK_FALSE(o.err.empty());
        if (!o.out.empty()) CHECK(json::accept(o.out));
    }

    // The cancellation failure is reported as JSON on stdout.
    auto o = run({"core", "sum", bad_fn});
    auto report = json::parse(o.out);
    CHECK(report["error"] == "cancellation");
    CHECK(report["subset"] == json::array({"a", "b", "c"}));

    // Prime n is accepted on the modified domain.
    CHECK(ok_json({"number", "mobius", "--n", "7", "--modified-domain"})["value"] == "-1");
    CHECK(ok_json({"number", "mobius", "--n", "7", "--modified-domain", "--variant", "lcm"})["value"] == "-1");

    // --json pretty-prints the same document.
    auto compact = run({"graph", "chromatic", k3});
    auto pretty = run({"graph", "chromatic", k3, "--json"});
    CHECK(json::parse(compact.out) == json::parse(pretty.out));
    CHECK(pretty.out.find('\n') < pretty.out.size() - 1);
}

TEST_CASE("geometry verify names the failing axiom") {
    auto no_ground = scratch("g1.json", R"({"elements":["a","b"],"closed":[[],["a"]]})");
    auto no_meet = scratch("g2.json", R"({"elements":["a","b","c"],"closed":[[],["a","b"],["b","c"],["a","b","c"]]})");
    // Closure system whose closed set {a,b,c} has no generating extreme points.
    auto no_basis = scratch("g3.json", R"({"elements":["a","b","c"],"closed":[[],["a"],["b"],["c"],["a","b","c"]]})");
    std::vector<std::pair<std::string, std::string>> cases{
        {no_ground, "ground-closed"}, {no_meet, "intersection-closed"}, {no_basis, "unique-basis"}};
    for (const auto& [file, axiom] : cases) {
        auto o = run({"geometry", "verify", file});
        CHECK(o.code == cli::kVerifyFailed);
        auto j = json::parse(o.out);
        CHECK(j["convex"] == false);
        CHECK(j["failed_axiom"] == axiom);
        CHECK(j.contains("witness"));
    }
    auto interval = scratch("g4.json", run({"generate", "geometry", "--n", "3", "--variant", "interval"}).out);
    auto j = ok_json({"geometry", "verify", interval});
    CHECK(j["convex"] == true);
    CHECK(j["free_sets"] == 6);
    CHECK(j["euler"] == "1");
}

TEST_CASE("verify command") {
    auto o = run({"verify", "whitney-core", "--seed", "7"});
    CHECK(o.code == 0);
    auto report = json::parse(o.out);
    CHECK(report["summary"]["fail"] == 0);
    std::vector<std::string> names;
    for (const auto& c : report["checks"]) names.push_back(c["name"]);
    CHECK(std::is_sorted(names.begin(), names.end()));

    // Same seed, same statuses and witnesses (timings aside).
    auto again = json::parse(run({"verify", "whitney-core", "--seed", "7", "--serial"}).out);
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(again["checks"][i]["name"] == report["checks"][i]["name"]);
        CHECK(again["checks"][i]["status"] == report["checks"][i]["status"]);
        CHECK(again["checks"][i]["instances"] == report["checks"][i]["instances"]);
    }

    auto mutant = run({"verify", "whitney-core.theorem1", "--seed", "7", "--inject-mutant"});
    CHECK(mutant.code == cli::kVerifyFailed);
    auto m = json::parse(mutant.out);
    CHECK(m["checks"][0]["status"] == "fail");
    CHECK(m["checks"][0]["witness"].get<std::string>().find("excludes subset") != std::string::npos);

    auto list = run({"verify", "lattice", "--list"});
    CHECK(list.out.find("lattice.blass-sagan") != std::string::npos);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("documented examples reproduce") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(BC_SOURCE_DIR) / "docs" / "examples";
    std::ifstream manifest(dir / "commands.txt");
    REQUIRE(manifest);
    const fs::path saved = fs::current_path();
    fs::current_path(dir);
    std::string line;
    int n = 0;
    while (std::getline(manifest, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        std::string name = line.substr(0, bar);
        name.erase(name.find_last_not_of(' ') + 1);
        std::vector<std::string> args;
        std::istringstream words(line.substr(bar + 1));
        for (std::string w; words >> w;) args.push_back(w);
        args.push_back("--json");
        auto o = run(args);
        std::ifstream expected_file(fs::path("outputs") / (name + ".json"));
        std::stringstream expected;
        expected << expected_file.rdbuf();
        INFO(name << ": " << o.err);
        CHECK(o.code == 0);
        CHECK(o.out == expected.str());
        ++n;
    }
    fs::current_path(saved);
    CHECK(n >= 16);
}

}  // TEST_SUITE
