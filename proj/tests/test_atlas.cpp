#include "curvesing/atlas.hpp"
#include "curvesing/notation.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

#include <set>

using namespace curvesing;
using namespace testing_helpers;

TEST_CASE("instantiate named entries") {
    CHECK(format_germ(instantiate("W8")) == "(4,5,6)");
    CHECK(format_germ(instantiate("(4,6,7)")) == "(4,6,7)");
    const MultiGerm e7l = instantiate("E7∨L");
    CHECK(e7l.ambient() == 3);
    CHECK(format_germ(e7l) == "(2,3,-)+(1,-,-)+(-,-,1)");
    CHECK(format_germ(instantiate("E7vL")) == format_germ(e7l));

    const MultiGerm l31 = instantiate("L(3,1)");
    CHECK(format_germ(l31) == format_germ(testing_helpers::l31(2)));
    Params p;
    p.lambda = 3;
    CHECK(format_germ(instantiate("L(4,2)", p)) == format_germ(l42(3)));

    p = {};
    p.k = 5;
    CHECK(format_germ(instantiate("A_k", p)) == "(1,-)+(1,3)");
    CHECK(format_germ(instantiate("A6")) == "(2,7)");
    CHECK(format_germ(instantiate("S7")) == "(1,-,-)+(1,2,-)+(-,-,1)+(-,1,1)");
    CHECK(format_germ(instantiate("D5")) == "(2,3)+(-,1)");
    CHECK(format_germ(instantiate("U9")) == "(3,5,7)+(-,-,1)");
    CHECK(format_germ(instantiate("A3∨L_2")) == "(1,-,-,-)+(1,2,-,-)+(-,-,1,-)+(-,-,-,1)");
}

TEST_CASE("instantiate rejects bad labels and parameters") {
    CHECK_THROWS_AS(instantiate("Q17"), DomainError);
    Params p;
    p.lambda = 1;
    CHECK_THROWS_AS(instantiate("L(4,2)", p), DomainError);
    p = {};
    p.k = 0;
    CHECK_THROWS_AS(instantiate("A_k", p), DomainError);
    p = {};
    p.n = 2;
    CHECK_THROWS_AS(instantiate("U9_n", p), DomainError);
    CHECK_THROWS_AS(instantiate("W8∨L"), DomainError);
}

TEST_CASE("stored delta agrees with monomial enumeration") {
    for (const auto& inst : atlas().catalogue({3, 4, 1})) {
        if (inst.params.n > 3 && inst.entry->uses_n()) continue;
        const MultiGerm g = instantiate(inst);
        const auto want = inst.entry->expected(inst.params).delta + inst.params.wedge;
        const int w = g.branch_count() > 4 || g.ambient() > 4 ? 10 : 16;
        INFO(inst.label);
        CHECK(oracle::monomial_delta(g, w) == want);
    }
}

TEST_CASE("delta values quoted for sporadic curves") {
    CHECK(delta(instantiate("Z10")) == 5);
    CHECK(delta(instantiate("(5,6,7,8)")) == 5);
    CHECK(delta(instantiate("W8*")) == 4);
    CHECK(delta(instantiate("Z9(1)")) == 4);
    CHECK(delta(instantiate("J20(2)")) == 4);
    CHECK(delta(instantiate("L(4,2)")) == 5);
    for (const auto& e : atlas().entries()) {
        if (e.group.rfind("sporadic", 0) != 0) continue;
        INFO(e.label);
        CHECK(e.expected({}).delta <= 5);
    }
}

TEST_CASE("table of space curves verifies") {
    const auto rows = atlas().table_rows();
    CHECK(rows.size() == 22);
    for (auto inst : rows) {
        for (int k = 1; k <= (inst.entry->uses_k() ? 3 : 1); ++k) {
            inst.params.k = k;
            inst.label = inst.entry->display(inst.params);
            const auto rep = verify_entry(inst);
            INFO(inst.label);
            for (const auto& f : rep.failures) INFO(f);
            CHECK(rep.ok);
            CHECK(rep.equations_checked > 0);
        }
    }
}

TEST_CASE("verify_entry reports failing equations") {
    AtlasEntry bad = *atlas().find("W8");
    bad.equations = [](const Params&) {
        EntryEquations e;
        e.polynomials.push_back(parse_mpoly("y^2-x^3", 3));
        return std::optional(e);
    };
    const auto rep = verify_entry({&bad, {}, "W8"});
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].find("branch 0") != std::string::npos);
}

TEST_CASE("confining curves verify and are determinantal") {
    for (const char* label : {"L(3,1)", "L(4,2)", "Ẽ7", "Ẽ8"}) {
        const auto rep = verify_entry(atlas().resolve(label));
        INFO(label);
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.ok);
    }
    for (int n = 3; n <= 5; ++n) {
        Params p;
        p.n = n;
        CHECK(verify_entry(atlas().resolve("L(n+2,n)", p)).ok);
    }
}

TEST_CASE("confining set by ambient dimension") {
    auto labels = [](int n) {
        std::vector<std::string> out;
        for (const auto& i : atlas().confining_set(n)) out.push_back(i.label);
        return out;
    };
    CHECK(labels(1) == std::vector<std::string>{"L(3,1)"});
    CHECK(labels(2) == std::vector<std::string>{"L(4,2)", "Ẽ7", "Ẽ8"});
    CHECK(labels(3) == std::vector<std::string>{"L(5,3)"});
    CHECK(labels(4) == std::vector<std::string>{"L(6,4)"});
    CHECK_THROWS_AS(atlas().confining_set(0), DomainError);
}

TEST_CASE("generic lines span in every n-subset") {
    Params p;
    p.n = 4;
    const MultiGerm g = instantiate("L(n+2,n)", p);
    const int r = g.branch_count();
    for (int mask = 0; mask < (1 << r); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) rows.push_back(g.branch(i).jet_coefficients(1));
        CHECK(oracle::gauss_rank(rows) == 4);
    }
}

TEST_CASE("presentation variants share the signature") {
    CHECK(signature_of(instantiate("T7")).same_type(signature_of(parse_germ("(3,2,-)+(3,-,2)"))));
    CHECK(signature_of(instantiate("T7*")).same_type(signature_of(parse_germ("(2,3,-)+(3,-,2)"))));
    CHECK(signature_of(instantiate("S5")).same_type(
        signature_of(parse_germ("(1,-,-)+(-,1,-)+(-,-,1)+(1,1,1)"))));
}

TEST_CASE("adjacency graph transcription") {
    const auto& g = atlas().adjacency_graph();
    auto has = [&](const std::string& s, const std::string& t, ArrowKind k) {
        for (const auto& e : g)
            if (e.source == s && e.target == t && e.kind == k) return true;
        return false;
    };
    CHECK(has("(4,6,7,9)", "E12(2)", ArrowKind::Both));
    CHECK(has("(5,6,7,8)", "(5,6,7,8,9)", ArrowKind::Param));
    CHECK(has("A2∨A3", "A2∨A2", ArrowKind::Curve));
    CHECK(has("(2,3,-,-)+(-,4,5,3)", "(2,3,-,-)+(-,5,4,3)", ArrowKind::Both));
    CHECK(has("D7", "D6", ArrowKind::Both));
    CHECK(has("A4", "A3", ArrowKind::Both));
    CHECK(atlas().edges_from("A2∨A2∨A2").empty());
    for (const auto& e : g) {
        INFO(e.source << " -> " << e.target);
        CHECK_NOTHROW(atlas().resolve(e.source));
        CHECK_NOTHROW(atlas().resolve(e.target));
        CHECK(e.source != e.target);
        CHECK_FALSE(e.citation.empty());
    }
}

TEST_CASE("adjacency edges respect semicontinuity of delta and branch count") {
    for (const auto& e : atlas().adjacency_graph()) {
        const MultiGerm s = instantiate(e.source), t = instantiate(e.target);
        INFO(e.source << " -> " << e.target);
        CHECK(delta(t) <= delta(s));
        if (e.kind != ArrowKind::Curve) CHECK(t.branch_count() >= s.branch_count());
    }
}

TEST_CASE("dot export") {
    std::vector<AdjacencyEdge> edges{{"A4", "A3", ArrowKind::Both, "c", std::nullopt},
                                     {"T7", "A2∨A2", ArrowKind::Param, "c", std::nullopt}};
    CHECK(adjacency_dot(edges) ==
          "digraph adjacency {\n"
          "  \"A4\";\n  \"A3\";\n  \"T7\";\n  \"A2∨A2\";\n"
          "  \"A4\" -> \"A3\" [kind=\"both\"];\n"
          "  \"T7\" -> \"A2∨A2\" [kind=\"param\"];\n}\n");
}

TEST_CASE("wedge constructor adds delta plus one") {
    const MultiGerm a = instantiate("A4"), b = instantiate("E6(1)");
    const MultiGerm w = wedge(a, b);
    CHECK(w.ambient() == 5);
    CHECK(delta(w) == delta(a) + delta(b) + 1);
    CHECK(decompose(w).size() == 2);
    CHECK(delta(wedge_lines(a, 2)) == delta(a) + 2);
}

TEST_CASE("atlas record") {
    const std::string rec = atlas_record(atlas().resolve("W8"));
    CHECK(rec.find("label=W8\n") != std::string::npos);
    CHECK(rec.find("parametrisation=(4,5,6)\n") != std::string::npos);
    CHECK(rec.find("equations=") != std::string::npos);
    CHECK(rec.find("signature=") != std::string::npos);
}
