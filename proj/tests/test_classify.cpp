#include "curvesing/classify.hpp"
#include "curvesing/deform.hpp"
#include "curvesing/notation.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <random>

using namespace curvesing;

namespace {

/// Components replaced by an invertible linear combination of themselves.
MultiGerm linear_change(const MultiGerm& g, const std::vector<std::vector<Rational>>& a) {
    std::vector<Branch> out;
    for (const auto& b : g.branches()) {
        std::vector<QPoly> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) c[i] = c[i] + QPoly(a[i][j]) * b.polynomials()[j];
        out.emplace_back(c);
    }
    return MultiGerm(g.ambient(), out);
}

/// t -> t + c t^2 on every branch.
MultiGerm reparametrise(const MultiGerm& g, const Rational& c) {
    const QPoly sub(std::vector<Rational>{0, 1, c});
    std::vector<Branch> out;
    for (const auto& b : g.branches()) {
        std::vector<QPoly> comps;
        for (const auto& p : b.polynomials()) {
            QPoly r;
            for (int k = p.degree(); k >= 0; --k) r = r * sub + QPoly(p.coeff(k));
            comps.push_back(r);
        }
        out.emplace_back(comps);
    }
    return MultiGerm(g.ambient(), out);
}

MultiGerm pad(const MultiGerm& g) {
    std::vector<Branch> out;
    for (const auto& b : g.branches()) {
        auto c = b.polynomials();
        c.emplace_back();
        out.emplace_back(c);
    }
    return MultiGerm(g.ambient() + 1, out);
}

MultiGerm reversed(const MultiGerm& g) {
    std::vector<Branch> b(g.branches().rbegin(), g.branches().rend());
    return MultiGerm(g.ambient(), b);
}

ClassificationResult classify(const std::string& text) { return recognize(parse_germ(text)); }

}  // namespace

TEST_CASE("sporadic and series curves are recognized") {
    const auto r = classify("(5,6,7,8)");
    CHECK(r.verdict == Verdict::Simple);
    CHECK(r.label == "(5,6,7,8)");
    CHECK(classify("(4,6,7)").label == "Z10");
    CHECK(classify("(2,3)").label == "A2");
    CHECK(classify("(3,4)").label == "E6");
    CHECK(classify("(2,3,-)+(-,-,1)").label == "A2∨L");
    CHECK(classify("(2,3,-)+(1,-,-)+(-,-,1)").label == "E7∨L");
}

TEST_CASE("plane curves beyond the catalogue use the ADE test") {
    const auto a = classify("(2,15)");
    CHECK(a.verdict == Verdict::Simple);
    CHECK(a.label == "A14");
    const auto d = classify("(2,9)+(-,1)");
    CHECK(d.verdict == Verdict::Simple);
    CHECK(d.label.find("11") != std::string::npos);
    const auto e12 = classify("(3,7)");
    CHECK(e12.verdict == Verdict::NotSimple);
    REQUIRE(e12.rule);
    CHECK(e12.rule->rule == "plane curve not of type ADE");
}

TEST_CASE("valuation bounds") {
    const auto m6 = classify("(6,7,8,9,10,11)");
    CHECK(m6.verdict == Verdict::NotSimple);
    CHECK(m6.rule->rule.find("multiplicity at least 6") != std::string::npos);
    CHECK(classify("(6,7,8,9,10)").verdict == Verdict::NotSimple);

    const auto v4 = classify("(5,6,7,11)");
    CHECK(v4.verdict == Verdict::NotSimple);
    CHECK(v4.rule->rule.find("v(φ4) > 10") != std::string::npos);
    CHECK(v4.rule->target == "L(5,3)");

    const auto v3 = classify("(5,6,8,9)");
    CHECK(v3.verdict == Verdict::NotSimple);
    CHECK(v3.rule->rule.find("v(φ3) ≥ 8") != std::string::npos);
    CHECK(v3.rule->target == "L(4,2)");

    const auto m3 = classify("(3,10,11)");
    CHECK(m3.verdict == Verdict::NotSimple);
    CHECK(m3.rule->target == "L(3,1)");

    CHECK(classify("(4,5,11)").verdict == Verdict::NotSimple);
    CHECK_FALSE(nonsimple_rules(parse_germ("(2,3)")));
    CHECK_FALSE(nonsimple_rules(parse_germ("(5,6,7,8)")));
    CHECK_FALSE(nonsimple_rules(parse_germ("(3,7,8)")));
}

TEST_CASE("branch count rules") {
    const auto four = nonsimple_rules(parse_germ("(2,3,-,-)+(-,-,2,3)+(1,1,1,1)+(1,2,3,4)"));
    REQUIRE(four);
    CHECK(four->rule.find("four or more branches") != std::string::npos);
    const auto three = nonsimple_rules(parse_germ("(2,3,-,-,-,-)+(-,-,2,3,-,-)+(-,-,-,-,2,3)"));
    REQUIRE(three);
    CHECK(three->rule == "three or more singular components");
    CHECK_FALSE(nonsimple_rules(parse_germ("(1,-,-)+(-,1,-)+(-,-,1)+(1,1,1)")));
}

TEST_CASE("listed non-simple curves carry their witness") {
    const auto r = classify("(5,6,7,9)");
    CHECK(r.verdict == Verdict::NotSimple);
    REQUIRE(r.rule);
    CHECK(r.rule->witness == "(5,6,7,9)->L(3,1)");
    CHECK(r.rule->target == "L(3,1)");
    CHECK(classify("(2,3,-,-,-,-)+(-,-,2,3,-,-)+(-,-,-,-,2,3)").verdict == Verdict::NotSimple);
}

TEST_CASE("confining curves are never simple") {
    for (const char* label : {"L(3,1)", "L(4,2)", "Ẽ7", "Ẽ8"}) {
        for (int lambda : {2, 3, 5}) {
            Params p;
            p.lambda = lambda;
            const auto r = recognize(instantiate(label, p));
            INFO(label << " λ=" << lambda);
            CHECK(r.verdict != Verdict::Simple);
        }
    }
    Params p;
    p.n = 3;
    CHECK(recognize(instantiate("L(n+2,n)", p)).verdict != Verdict::Simple);
}

TEST_CASE("recognition is invariant under coordinate changes") {
    const std::vector<std::string> samples{"(4,5,6)", "(2,3,-)+(-,5,2)", "(3,4,5)+(1,-,-)", "(2,3,-)+(1,-,-)+(-,-,1)",
                                           "(5,6,7,8)", "(2,3,-,-)+(-,5,4,3)"};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& text : samples) {
        const MultiGerm g = parse_germ(text);
        const auto base = recognize(g);
        const int n = g.ambient();
        std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = i == j ? 1 : (j > i ? coef(rng) : 0);
        INFO(text);
        CHECK(recognize(linear_change(g, a)).label == base.label);
        CHECK(recognize(reparametrise(g, Rational(1, 2))).label == base.label);
        CHECK(recognize(pad(g)).label == base.label);
        CHECK(recognize(reversed(g)).label == base.label);
    }
}

TEST_CASE("rules never fire below delta five") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> e(2, 9);
    for (int trial = 0; trial < 30; ++trial) {
        const std::string text = "(" + std::to_string(e(rng)) + "," + std::to_string(e(rng) + 1) + "," +
                                 std::to_string(e(rng) + 2) + ")";
        const MultiGerm g = parse_germ(text);
        const auto r = recognize(g);
        INFO(text);
        if (r.signature.whole.delta <= 4) CHECK(r.verdict != Verdict::NotSimple);
        if (r.verdict == Verdict::Simple)
            CHECK(catalogue_signature(*r.match).same_type(r.signature));
    }
}

TEST_CASE("classification record") {
    const std::string rec = classification_record(classify("(5,6,7,11)"));
    CHECK(rec.rfind("verdict=not-simple\n", 0) == 0);
    CHECK(rec.find("rule=") != std::string::npos);
    CHECK(rec.find("target=L(5,3)\n") != std::string::npos);
    CHECK(classification_record(classify("(2,3)")).find("label=A2\n") != std::string::npos);
}
