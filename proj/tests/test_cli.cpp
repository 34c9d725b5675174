#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgpoly/enumerate.hpp"
#include "rgpoly/graphio.hpp"

using namespace rgpoly;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "cli_test_" + std::to_string(counter++) + ".rg";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse the documented example") {
    GraphFile f = parse_graphs("graph loop\nvertex v1: a a'\nedge e1: a a'\n");
    REQUIRE(f.errors.empty());
    REQUIRE(f.graphs.size() == 1);
    CHECK(f.graphs[0].name == "loop");
    CHECK(isomorphic(f.graphs[0].graph, fixtures::loop()));
    CHECK(f.graphs[0].edge_names == std::vector<std::string>{"e1"});
}

TEST_CASE("parse errors are positioned") {
    // dart used three times
    GraphFile f = parse_graphs(
        "graph bad\n"
        "vertex v1: a b\n"
        "vertex v2: a\n"
        "edge e1: a b\n");
    REQUIRE_FALSE(f.errors.empty());
    CHECK(f.errors[0].line == 3);
    CHECK(f.errors[0].message.find("DuplicateDart") != std::string::npos);
    CHECK(f.graphs.empty());

    GraphFile g = parse_graphs("graph g\nvertex v1: a a'\nedge e1: a a\n");
    REQUIRE_FALSE(g.errors.empty());
    CHECK(g.errors[0].line == 3);
    CHECK(g.errors[0].message.find("SelfPairedDart") != std::string::npos);

    GraphFile h = parse_graphs("graph g\nvertex v1: a a' c\nedge e1: a a'\n");
    REQUIRE_FALSE(h.errors.empty());
    CHECK(h.errors[0].line == 2);
    CHECK(h.errors[0].message.find("UnpairedDart") != std::string::npos);

    // an error in one block does not discard the others
    GraphFile k = parse_graphs(
        "graph ok\nvertex v: a a'\nedge e: a a'\n"
        "graph broken\nvertex v: b b\nedge e: b b\n");
    CHECK(k.graphs.size() == 1);
    CHECK_FALSE(k.errors.empty());
}

TEST_CASE("empty file parses to nothing") {
    GraphFile f = parse_graphs("");
    CHECK(f.graphs.empty());
    CHECK(f.errors.empty());
    GraphFile g = parse_graphs("# only a comment\n\n");
    CHECK(g.graphs.empty());
    CHECK(g.errors.empty());
}

TEST_CASE("comments, isolated vertices, weights and tangles") {
    GraphFile f = parse_graphs(
        "# a weighted loop plus an isolated vertex\n"
        "graph g\n"
        "vertex v1: a a'   # the loop\n"
        "vertex v2:\n"
        "edge e1: a a'\n"
        "weight e1 w\n"
        "tangle e1 w3\n");
    REQUIRE(f.errors.empty());
    REQUIRE(f.graphs.size() == 1);
    const RibbonGraph& g = f.graphs[0].graph;
    CHECK(g.vertex_count() == 2);
    CHECK(g.isolated_vertices() == 1);
    CHECK(g.weight(0) == "w");
    CHECK(g.tangle(0) == TangleType::w3);

    GraphFile bad = parse_graphs("graph g\nvertex v: a a'\nedge e: a a'\ntangle e w9\n");
    REQUIRE_FALSE(bad.errors.empty());
    CHECK(bad.errors[0].line == 4);
}

TEST_CASE("serialize round trips") {
    for (const RibbonGraph& g :
         {fixtures::bridge(), fixtures::loop(), fixtures::double_loop(), fixtures::triangle(),
          fixtures::loop().with_weight(0, "w").with_tangle(0, TangleType::w2)}) {
        std::string text = serialize(g, "g");
        GraphFile f = parse_graphs(text);
        REQUIRE(f.errors.empty());
        REQUIRE(f.graphs.size() == 1);
        CHECK(isomorphic(f.graphs[0].graph, g));
        // serialization is a fixed point on its own output
        CHECK(serialize(f.graphs[0].graph, "g") == text);
    }
    for (const RibbonGraph& g : connected_maps_up_to(4)) {
        GraphFile f = parse_graphs(serialize(g, "m"));
        REQUIRE(f.errors.empty());
        CHECK(isomorphic(f.graphs[0].graph, g));
    }
}

TEST_CASE("compute commands") {
    TempFile loop("graph loop\nvertex v1: a a'\nedge e1: a a'\n");
    RunResult r = run_cli({"compute", "br", loop.path});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + 1*beta\n");

    RunResult t = run_cli({"compute", "tutte", loop.path});
    CHECK(t.out == "1*y_T\n");

    TempFile both(
        "graph bridge\nvertex u: a\nvertex v: b\nedge e1: a b\n"
        "graph loop\nvertex w: c c'\nedge e1: c c'\n");
    RunResult m = run_cli({"compute", "br", both.path});
    CHECK(m.code == 0);
    CHECK(m.out == "bridge: 1 + 1*alpha\nloop: 1 + 1*beta\n");
    RunResult sel = run_cli({"compute", "br", both.path, "--graph", "loop"});
    CHECK(sel.out == "1 + 1*beta\n");
    RunResult missing = run_cli({"compute", "br", both.path, "--graph", "nope"});
    CHECK(missing.code == 2);

    RunResult j = run_cli({"compute", "jones-cp", loop.path, "--writhe", "-1"});
    CHECK(j.code == 0);
    CHECK(j.out == "1*t^(-3/2)\n");
    RunResult jw = run_cli({"compute", "jones-cp", loop.path});
    CHECK(jw.code == 2);

    TempFile weighted("graph loop\nvertex v1: a a'\nedge e1: a a'\nweight e1 b\n");
    RunResult hf = run_cli({"compute", "homfly-full", weighted.path});
    CHECK(hf.code == 0);
    CHECK(hf.out ==
          "labels={} poly=1*x^-1*y\n"
          "labels={(e1),(e1')} poly=-1*x^-3*y^-1 + 1*x^-1*y^-1\n");
    // weights are required for the labeled invariant
    RunResult nw = run_cli({"compute", "homfly-full", loop.path});
    CHECK(nw.code == 2);

    RunResult runs_same = run_cli({"compute", "homfly", both.path});
    CHECK(runs_same.out == run_cli({"compute", "homfly", both.path}).out);
}

TEST_CASE("transform commands") {
    TempFile bridge("graph f1\nvertex u: a\nvertex v: b\nedge e1: a b\n");
    RunResult d = run_cli({"transform", "dual", bridge.path});
    CHECK(d.code == 0);
    GraphFile parsed = parse_graphs(d.out);
    REQUIRE(parsed.errors.empty());
    REQUIRE(parsed.graphs.size() == 1);
    CHECK(isomorphic(parsed.graphs[0].graph, fixtures::loop()));

    RunResult t = run_cli({"transform", "tensor", "3", bridge.path});
    CHECK(t.code == 0);
    GraphFile pt = parse_graphs(t.out);
    REQUIRE(pt.errors.empty());
    CHECK(pt.graphs[0].graph.vertex_count() == 3);
    CHECK(pt.graphs[0].graph.edge_count() == 2);

    TempFile disc("graph d\nvertex u: a a'\nvertex w:\nedge e1: a a'\n");
    RunResult dd = run_cli({"transform", "dual", disc.path});
    CHECK(dd.code == 2);
}

TEST_CASE("verify command") {
    TempFile dl("graph f3\nvertex v: a b a' b'\nedge e1: a a'\nedge e2: b b'\n");
    RunResult r = run_cli({"verify", "all", dl.path});
    CHECK(r.code == 0);
    // one record per identity, all passing
    int passes = 0;
    std::istringstream lines(r.out);
    std::string line;
    bool seed_line = false;
    while (std::getline(lines, line)) {
        if (line.rfind("# seed=", 0) == 0) {
            seed_line = true;
            continue;
        }
        CHECK(line.find("graph=f3") != std::string::npos);
        CHECK(line.find("result=pass") != std::string::npos);
        CHECK(line.find("identity=") == 0);
        CHECK(line.find("mode=") != std::string::npos);
        CHECK(line.find("points=") != std::string::npos);
        ++passes;
    }
    CHECK(seed_line);
    CHECK(passes >= 7);

    RunResult one = run_cli({"verify", "duality", dl.path, "--seed", "5"});
    CHECK(one.code == 0);
    CHECK(one.out.find("identity=duality graph=f3 mode=symbolic points=0 result=pass") !=
          std::string::npos);

    RunResult odd = run_cli({"verify", "tensor-odd", "2", dl.path});
    CHECK(odd.code == 0);
    CHECK(odd.out.find("identity=tensor-odd") != std::string::npos);

    // identical bytes across runs
    CHECK(run_cli({"verify", "all", dl.path}).out == r.out);

    RunResult bad = run_cli({"verify", "nonsense", dl.path});
    CHECK(bad.code == 2);
    RunResult nofile = run_cli({"verify", "all", "does_not_exist.rg"});
    CHECK(nofile.code == 2);
}

TEST_CASE("malformed input exits 2") {
    TempFile bad("graph g\nvertex v: a\nedge e: a a\n");
    RunResult r = run_cli({"compute", "br", bad.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("SelfPairedDart") != std::string::npos);
    CHECK(r.err.find(":3:") != std::string::npos);

    RunResult usage = run_cli({});
    CHECK(usage.code == 2);
    RunResult unknown = run_cli({"frobnicate", "x"});
    CHECK(unknown.code == 2);
}
