#include "cli.hpp"

#include "curvesing/atlas.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

using curvesing::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("classify command") {
    const auto r = call({"classify", "(5,6,7,8)"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict: simple\n"));
    CHECK(contains(r.out, "label: (5,6,7,8)\n"));

    const auto rec = call({"classify", "(6,7,8,9,10,11)", "--format=records"});
    CHECK(rec.code == 0);
    CHECK(contains(rec.out, "verdict=not-simple\n"));
    CHECK(contains(rec.out, "rule=irreducible curve of multiplicity at least 6\n"));
}

TEST_CASE("resolve command on the E8 cusp") {
    const auto r = call({"resolve", "(3,5)", "--format", "records"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "multiplicity_sequence_0=3,2,1\n"));
    CHECK(contains(r.out, "satellites=2\n"));
    CHECK(contains(r.out, "modality=0\n"));
    CHECK(contains(r.out, "bpv=simple\n"));
    CHECK(contains(r.out, "ade=E8\n"));
    CHECK(call({"resolve", "(4,5,6)"}).code == curvesing::cli::Usage);
}

TEST_CASE("invariants command") {
    const auto r = call({"invariants", "(4,6,7)", "--format=records"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "delta=5\n"));
    CHECK(contains(r.out, "embedding_dimension=3\n"));
    CHECK(contains(r.out, "semigroups=<4,6,7>\n"));
    const auto l = call({"invariants", "L(4,2)", "--lambda", "3", "--format=records"});
    CHECK(l.code == 0);
    CHECK(contains(l.out, "delta=5\n"));
}

TEST_CASE("verification commands") {
    const auto atlas = call({"verify-atlas"});
    CHECK(atlas.code == 0);
    CHECK(contains(atlas.out, "table rows verified: 22/22\n"));
    const auto adj = call({"verify-adjacency", "--format=records"});
    CHECK(adj.code == 0);
    CHECK(contains(adj.out, "families_verified="));
    CHECK_FALSE(contains(adj.out, "ok=no"));
}

TEST_CASE("dot and listing are deterministic") {
    const auto a = call({"adjacency-dot"});
    const auto b = call({"adjacency-dot"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == curvesing::adjacency_dot(curvesing::atlas().adjacency_graph()));
    const auto list = call({"atlas-list"});
    CHECK(contains(list.out, "L(3,1)  [confining]"));
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == curvesing::cli::Usage);
    CHECK(call({"frobnicate"}).code == curvesing::cli::Usage);
    CHECK(call({"classify", "(2,3"}).code == curvesing::cli::Parse);
    CHECK(call({"classify", "(2,3)+(1,2,3)"}).code == curvesing::cli::Parse);
    CHECK(call({"--truncation", "16", "invariants", "(2,41)"}).code == curvesing::cli::Stabilization);
    CHECK(call({"--format=xml", "atlas-list"}).code == curvesing::cli::Usage);
    CHECK(call({"classify"}).code == curvesing::cli::Usage);
}

TEST_CASE("input file and output file") {
    const std::string in = "cli_test_input.txt", out = "cli_test_output.txt";
    {
        std::ofstream f(in);
        f << "# germs\n(2,3)\n\n(3,4)\n";
    }
    const auto r = call({"classify", "--input", in, "--output", out, "--format=records"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out);
    std::stringstream text;
    text << f.rdbuf();
    CHECK(contains(text.str(), "label=A2\n"));
    CHECK(contains(text.str(), "label=E6\n"));
    std::remove(in.c_str());
    std::remove(out.c_str());
}
