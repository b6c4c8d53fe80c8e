// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "curvesing/atlas.hpp"
#include "curvesing/classify.hpp"
#include "curvesing/deform.hpp"
#include "curvesing/notation.hpp"
#include "curvesing/plane.hpp"

#include "oracle.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace curvesing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> problems;
    void fail(const std::string& why) {
        pass = false;
        problems.push_back(why);
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << name << " ("
              << std::fixed << std::setprecision(1) << seconds_since(t0) << " s): " << o.detail.str();
    for (const auto& p : o.problems) std::cout << " | " << p;
    std::cout << "\n" << std::flush;
}

bool monomial(const MultiGerm& g, std::vector<int>& exps) {
    exps.clear();
    for (const auto& c : g.branch(0).polynomials()) {
        if (c.zero()) continue;
        if (!(c == QPoly::monomial(c.leading(), c.degree()))) return false;
        exps.push_back(c.degree());
    }
    return true;
}

MultiGerm axes(int r) {
    std::vector<Branch> b;
    for (int i = 0; i < r; ++i) {
        std::vector<QPoly> c(static_cast<std::size_t>(r));
        c[static_cast<std::size_t>(i)] = QPoly::monomial(1, 1);
        b.emplace_back(c);
    }
    return MultiGerm(r, b);
}

MultiGerm monomial_curve(int k) {
    std::vector<QPoly> c;
    for (int i = 0; i < k; ++i) c.push_back(QPoly::monomial(1, k + i));
    return MultiGerm(k, {Branch(c)});
}

Instance plane_series(char kind, int k) {
    Params p;
    p.n = 2;
    if (kind == 'A') {
        p.k = k;
        return atlas().resolve("A_k", p);
    }
    p.k = k % 2 == 1 ? (k - 3) / 2 : (k - 2) / 2;
    return atlas().resolve(k % 2 == 1 ? "D_2k+3" : "D_2k+2", p);
}

/// Random plane germ of total multiplicity at most 4.
MultiGerm random_plane_germ(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1), small(-2, 2), mult(1, 4), expo(1, 6);
    std::vector<Branch> branches;
    int budget = 4;
    while (budget > 0) {
        const int m = std::min(budget, mult(rng));
        budget -= m;
        if (m == 1) {
            const int e = expo(rng);
            branches.emplace_back(std::vector<QPoly>{QPoly::monomial(1, 1),
                                                     QPoly::monomial(small(rng) == 0 ? 1 : small(rng), e)});
        } else {
            int e = m + expo(rng);
            if (std::gcd(e, m) == 1 || coin(rng)) {
                while (std::gcd(e, m) != 1) ++e;
                QPoly y = QPoly::monomial(1, e) + QPoly::monomial(small(rng), e + 1);
                branches.emplace_back(std::vector<QPoly>{QPoly::monomial(1, m), y});
            } else {
                QPoly y = QPoly::monomial(1, e) + QPoly::monomial(1, e + 1);
                branches.emplace_back(std::vector<QPoly>{QPoly::monomial(1, m), y});
            }
        }
        if (coin(rng)) break;
    }
    // Swap the axes of some branches so tangents differ.
    for (auto& b : branches)
        if (coin(rng)) b = Branch(std::vector<QPoly>{b.polynomials()[1], b.polynomials()[0]});
    return MultiGerm(2, branches);
}

}  // namespace

int main() {
    criterion(1, "delta by jet algebra equals semigroup gap count on irreducible entries", [](Outcome& o) {
        int count = 0;
        double worst = 0;
        for (const auto& inst : atlas().catalogue()) {
            const MultiGerm g = instantiate(inst);
            if (g.branch_count() != 1) continue;
            const auto t0 = Clock::now();
            const int d = delta(g);
            worst = std::max(worst, seconds_since(t0));
            std::vector<int> exps;
            const int gaps = monomial(g, exps) ? static_cast<int>(oracle::gaps(exps).size())
                                               : value_semigroup(g.branch(0)).delta();
            if (d != gaps) o.fail(inst.label + ": " + std::to_string(d) + " vs " + std::to_string(gaps));
            ++count;
        }
        const std::vector<std::pair<std::string, int>> quoted{{"(4,6,7)", 5}, {"(5,6,7,8)", 5}, {"(4,5,7)", 4}};
        for (const auto& [text, want] : quoted)
            if (delta(parse_germ(text)) != want) o.fail("delta" + text + " != " + std::to_string(want));
        if (worst >= 1) o.fail("slowest delta took " + std::to_string(worst) + " s");
        o.detail << count << " instances, slowest " << std::setprecision(3) << worst << " s";
    });

    criterion(2, "delta(L_r^r) = r-1 and delta(M_k) = k-1", [](Outcome& o) {
        for (int r = 2; r <= 6; ++r)
            if (delta(axes(r)) != r - 1) o.fail("L_" + std::to_string(r));
        for (int k = 2; k <= 6; ++k)
            if (delta(monomial_curve(k)) != k - 1) o.fail("M_" + std::to_string(k));
        o.detail << "r, k = 2..6";
    });

    criterion(3, "table of indecomposable space curves: equations vanish, rank conditions hold", [](Outcome& o) {
        const auto t0 = Clock::now();
        int rows = 0, checked = 0;
        for (auto inst : atlas().table_rows()) {
            ++rows;
            for (int k = 1; k <= (inst.entry->uses_k() ? 3 : 1); ++k) {
                inst.params.k = k;
                inst.label = inst.entry->display(inst.params);
                const auto rep = verify_entry(inst);
                checked += rep.equations_checked;
                if (!rep.ok || rep.equations_checked == 0) o.fail(inst.label);
            }
        }
        if (rows != 22) o.fail(std::to_string(rows) + " rows");
        if (seconds_since(t0) >= 10) o.fail("over 10 s");
        o.detail << rows << " rows, " << checked << " equations";
    });

    criterion(4, "confining curve minors vanish for lambda = 2, 3", [](Outcome& o) {
        for (const char* label : {"L(4,2)", "L(3,1)"}) {
            for (int lambda : {2, 3}) {
                Params p;
                p.lambda = lambda;
                const Instance inst = atlas().resolve(label, p);
                const auto rep = verify_entry(inst);
                if (!rep.ok) o.fail(std::string(label) + " at lambda " + std::to_string(lambda));
                const auto eqs = inst.entry->equations(inst.params);
                if (!eqs || !eqs->matrix) o.fail(std::string(label) + " has no matrix");
            }
        }
        o.detail << "L(4,2): 4 branches, L(3,1): 3 branches";
    });

    criterion(5, "congruence s*z - x = 0 mod (t^3-s)^3 on the (5,6,7,9) family", [](Outcome& o) {
        const auto f = m5679_family();
        const STPoly g = STPoly::monomial(QPoly(1), 3) - STPoly(QPoly(std::vector<Rational>{0, 1}));
        const bool as_stated = verify_congruence(f, parse_mpoly("s*z - x", 4), g, 3);
        const bool corrected = verify_congruence(f, parse_mpoly("s*z - x^2", 4), g, 3) &&
                               verify_congruence(f, parse_mpoly("w", 4), g, 3);
        if (!as_stated) o.fail("s*z - x leaves a nonzero remainder");
        o.detail << "s*z - x^2 and w vanish mod (t^3-s)^3: " << (corrected ? "yes" : "no");
    });

    criterion(6, "surface contains the M3 -> A3 branch, cusp branch to order 3", [](Outcome& o) {
        const auto f = a2m3_family(true);
        const bool branch = verify_on_surface(f, 1, a2m3_surface(), SurfaceMode::Exact);
        const bool cusp = verify_on_surface(f, 0, a2m3_surface(), SurfaceMode::ModDegree3);
        if (!branch) o.fail("surface does not vanish on the M3 -> A3 branch");
        if (!cusp) o.fail("cusp branch not on the surface mod degree 3");
        const bool corrected = verify_on_surface(a2m3_family(false), 1, a2m3_surface(15), SurfaceMode::Exact);
        o.detail << "cusp mod degree 3: " << (cusp ? "yes" : "no")
                 << "; with s -> s^2 in the branch and z*s^8 coefficient 15 it vanishes: "
                 << (corrected ? "yes" : "no");
    });

    criterion(7, "plane theory: Wall modality, satellites, BPV versus ADE", [](Outcome& o) {
        int instances = 0;
        for (int k = 1; k <= 12; ++k) {
            const auto tree = resolution_tree(instantiate(plane_series('A', k)));
            ++instances;
            if (wall_modality(tree) != 0) o.fail("A" + std::to_string(k));
            if (k % 2 == 0 && tree.satellite_count() != 1) o.fail("satellites of A" + std::to_string(k));
        }
        for (int k = 4; k <= 12; ++k) {
            ++instances;
            if (wall_modality(resolution_tree(instantiate(plane_series('D', k)))) != 0)
                o.fail("D" + std::to_string(k));
        }
        for (const char* e : {"E6", "E7", "E8"}) {
            ++instances;
            if (wall_modality(resolution_tree(instantiate(e))) != 0) o.fail(e);
        }
        if (resolution_tree(instantiate("E6")).satellite_count() != 2) o.fail("satellites of E6");
        if (resolution_tree(instantiate("E8")).satellite_count() != 2) o.fail("satellites of E8");
        for (const char* e : {"Ẽ7", "Ẽ8"})
            if (wall_modality(resolution_tree(instantiate(e))) != 1) o.fail(std::string(e) + " modality");

        std::mt19937 rng(2024);
        int corpus = 0, attempts = 0, simple = 0;
        while (corpus < 60 && attempts < 5000) {
            ++attempts;
            const MultiGerm g = random_plane_germ(rng);
            int d = 0;
            try {
                if (embedding_dimension(g) < 2) continue;
                d = delta(g);
            } catch (const Error&) {
                continue;
            }
            if (d > 8) continue;
            const auto tree = resolution_tree(g);
            ++corpus;
            if (ade_recognize(tree)) ++simple;
            if (bpv_simple(tree) != ade_recognize(tree).has_value()) o.fail("disagreement on " + format_germ(g));
        }
        if (corpus < 50) o.fail("corpus too small");
        o.detail << instances << " simple instances, corpus of " << corpus << " random germs (" << simple << " ADE)";
    });

    criterion(8, "planar 2-jet discrimination", [](Outcome& o) {
        if (!planar_2jet(instantiate("L(3,1)"))) o.fail("L(3,1)");
        if (planar_2jet(instantiate("J20(2)"))) o.fail("three tangent lines with non-planar 2-jet");
        if (planar_2jet(instantiate("L(4,2)"))) o.fail("L(4,2)");
        for (const char* g : {"(2,7)", "(3,4)", "(2,3)+(-,1)", "(1,-)+(-,1)+(1,1)", "(4,9)", "(3,5)+(1,-)"})
            if (!planar_2jet(parse_germ(g))) o.fail(g);
        o.detail << "3 space curves, 6 plane curves";
    });

    criterion(9, "self-recognition of the atlas", [](Outcome& o) {
        const auto t0 = Clock::now();
        std::vector<std::string> missed;
        int simple = 0;
        for (const auto& inst : atlas().catalogue()) {
            const auto r = recognize(instantiate(inst));
            if (inst.entry->tag != EntryTag::Simple) {
                if (r.verdict == Verdict::Simple) o.fail(inst.label + " recognized as simple");
                continue;
            }
            ++simple;
            if (r.verdict == Verdict::NotSimple) o.fail(inst.label + " recognized as not simple");
            else if (r.verdict != Verdict::Simple || r.label != inst.label) missed.push_back(inst.label);
        }
        if (!missed.empty()) {
            std::set<std::string> ambiguous;
            for (const auto& group : ambiguity_report())
                for (const auto& l : group) ambiguous.insert(l);
            for (const auto& l : missed)
                if (!ambiguous.count(l)) o.fail(l + " not recognized and not in the ambiguity report");
        }
        const double secs = seconds_since(t0);
        if (secs >= 120) o.fail("sweep took over 2 min");
        o.detail << simple << " simple instances, " << missed.size() << " ambiguous";
    });

    criterion(10, "deformation families and witnessed edges", [](Outcome& o) {
        int families = 0;
        for (const auto& f : shipped_families()) {
            ++families;
            const auto rep = verify_family(f);
            if (!rep.ok) o.fail(f.id);
        }
        int edges = 0;
        for (const auto& e : atlas().adjacency_graph()) {
            if (!e.witness || e.kind == ArrowKind::Curve) continue;
            ++edges;
            if (!find_family(*e.witness)) o.fail("no family " + *e.witness);
            const MultiGerm s = instantiate(e.source), t = instantiate(e.target);
            if (delta(t) - t.branch_count() > delta(s) - s.branch_count())
                o.fail("delta - r + 1 increases on " + e.source + " -> " + e.target);
        }
        o.detail << families << " families, " << edges << " witnessed edges";
    });

    criterion(11, "non-simple rules on the valuation examples", [](Outcome& o) {
        const std::vector<std::pair<std::string, std::string>> cases{
            {"(5,6,7,11)", "v(φ4) > 10"},
            {"(5,6,8,9)", "v(φ3) ≥ 8"},
            {"(3,10,11)", "v(φ3) > 9"},
            {"(6,7,8,9,10,11)", "multiplicity at least 6"}};
        for (const auto& [text, rule] : cases) {
            const auto r = recognize(parse_germ(text));
            if (r.verdict != Verdict::NotSimple || !r.rule || r.rule->rule.find(rule) == std::string::npos)
                o.fail(text);
        }
        o.detail << cases.size() << " germs";
    });

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
              << "\n";
    return failures ? 1 : 0;
}
