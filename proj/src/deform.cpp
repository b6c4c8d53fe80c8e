#include "curvesing/deform.hpp"

#include "curvesing/notation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvesing {

namespace {

STPoly tpow(int e, const QPoly& c = QPoly(1)) { return STPoly::monomial(c, e); }
const QPoly kS(std::vector<Rational>{0, 1});
STPoly s_times(const STPoly& p) { return STPoly(kS) * p; }

std::vector<STPoly> lift_all(const std::vector<QPoly>& comps) {
    std::vector<STPoly> out;
    for (const auto& c : comps) out.push_back(lift(c));
    return out;
}

const std::vector<QPoly>& exact_components(const Branch& b) {
    if (!b.exact()) throw DomainError("deformation constructors need polynomial branches");
    return b.polynomials();
}

std::string monomial_notation(int m) {
    std::string out = "(";
    for (int i = 0; i < m; ++i) out += (i ? "," : "") + std::to_string(m + i);
    return out + ")";
}

}  // namespace

MultiGerm specialize(const DeformationFamily& f, const Rational& s0) {
    std::vector<Branch> out;
    for (std::size_t bi = 0; bi < f.branches.size(); ++bi) {
        std::vector<QPoly> comps;
        QPoly g;
        for (const auto& c : f.branches[bi]) {
            comps.push_back(evaluate_s(c, s0));
            if (!comps.back().zero()) g = gcd(g, comps.back());
        }
        if (g.zero()) throw DomainError("branch " + std::to_string(bi) + " vanishes identically");
        if (g.degree() == 0) continue;
        QPoly rest = g;
        for (const auto& r : rational_roots(g)) {
            const QPoly lin(std::vector<Rational>{-r, 1});
            while (true) {
                auto [q, rem] = divmod(rest, lin);
                if (!rem.zero()) break;
                rest = q;
            }
            std::vector<QPoly> local;
            for (const auto& c : comps) local.push_back(shift(c, r));
            out.emplace_back(std::move(local));
        }
        if (rest.degree() > 0)
            throw DomainError("branch " + std::to_string(bi) + " has an irrational base point at s = " +
                              s0.get_str());
    }
    if (out.empty()) throw DomainError("no branch passes through the origin at s = " + s0.get_str());
    return MultiGerm(f.ambient, std::move(out));
}

bool verify_congruence(const DeformationFamily& f, const MPoly& p, const STPoly& g, int k) {
    if (k < 1 || g.degree() < 1 || !(g.leading() == QPoly(1)))
        throw DomainError("modulus must be a monic polynomial in t of positive degree, k ≥ 1");
    if (p.nvars() != f.ambient) throw DomainError("form and family have different ambient dimensions");
    const STPoly gk = g.pow(k);
    for (const auto& b : f.branches)
        if (!p.substitute(b).rem_monic(gk).zero()) return false;
    return true;
}

bool verify_on_surface(const DeformationFamily& f, int branch, const MPoly& surface, SurfaceMode mode) {
    if (branch < 0 || branch >= static_cast<int>(f.branches.size()))
        throw DomainError("branch index out of range");
    if (surface.nvars() != f.ambient) throw DomainError("surface and family have different ambient dimensions");
    const STPoly v = surface.substitute(f.branches[static_cast<std::size_t>(branch)]);
    if (mode == SurfaceMode::Exact) return v.zero();
    for (int e = 0; e < 3; ++e)
        if (!v.coeff(e).zero()) return false;
    return true;
}

DeformationFamily wedge_family(const MultiGerm& g1, const MultiGerm& g2) {
    if (g1.ambient() != g2.ambient()) throw DomainError("wedge family needs equal ambient dimensions");
    const int n = g1.ambient();
    DeformationFamily f;
    f.id = "wedge";
    f.ambient = 2 * n;
    std::vector<Branch> all;
    for (const auto& b : g1.branches()) {
        auto c = lift_all(exact_components(b));
        c.resize(static_cast<std::size_t>(2 * n));
        f.branches.push_back(std::move(c));
        all.push_back(b);
    }
    for (const auto& b : g2.branches()) {
        auto c = lift_all(exact_components(b));
        for (int j = 0; j < n; ++j) c.push_back(s_times(c[static_cast<std::size_t>(j)]));
        f.branches.push_back(std::move(c));
        all.push_back(b);
    }
    f.source = format_germ(MultiGerm(n, all));
    f.target = format_germ(wedge(g1, g2));
    f.citation = "union C1 ∪ C2 deforms into C1 ∨ C2";
    return f;
}

DeformationFamily monomialize_family(const Branch& b) {
    const auto& comps = exact_components(b);
    const int m = b.multiplicity();
    int lead = -1;
    for (std::size_t j = 0; j < comps.size(); ++j)
        if (comps[j].degree() == m && comps[j] == QPoly::monomial(comps[j].leading(), m)) lead = static_cast<int>(j);
    if (lead < 0) throw DomainError("no component of the form c t^m; prepare the parametrisation first");
    std::vector<QPoly> ordered{QPoly::monomial(1, m)};
    for (std::size_t j = 0; j < comps.size(); ++j)
        if (static_cast<int>(j) != lead) ordered.push_back(comps[j]);
    while (static_cast<int>(ordered.size()) < m) ordered.emplace_back();
    DeformationFamily f;
    f.id = "monomialize";
    f.ambient = static_cast<int>(ordered.size());
    std::vector<STPoly> c{lift(ordered[0])};
    for (std::size_t i = 1; i < ordered.size(); ++i)
        c.push_back(lift(ordered[i]) + tpow(m + static_cast<int>(i), kS));
    f.branches.push_back(std::move(c));
    f.source = format_germ(MultiGerm(f.ambient, {Branch(ordered)}));
    f.target = monomial_notation(m);
    f.citation = "irreducible curve of multiplicity m deforms into M_m";
    return f;
}

DeformationFamily partition_family(int m, const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p <= 0) throw DomainError("partition parts must be positive");
        sum += p;
    }
    if (sum != m || parts.empty()) throw DomainError("parts must sum to m");
    STPoly p(QPoly(1));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int k = static_cast<int>(i);
        const Rational b = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
        const STPoly lin(std::vector<QPoly>{QPoly(std::vector<Rational>{0, -b}), QPoly(1)});
        p *= lin.pow(parts[i]);
    }
    DeformationFamily f;
    f.ambient = m;
    std::vector<STPoly> c;
    for (int i = 0; i < m; ++i) c.push_back(tpow(i) * p);
    f.branches.push_back(std::move(c));
    std::string id = "partition:" + std::to_string(m) + ":";
    MultiGerm target = parse_germ(monomial_notation(parts[0]));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        id += (i ? "," : "") + std::to_string(parts[i]);
        if (i) target = wedge(target, parse_germ(monomial_notation(parts[i])));
    }
    f.id = id;
    f.source = monomial_notation(m);
    f.target = format_germ(target);
    f.citation = "M_m deforms into the wedge of M_{m_i} for a partition of m";
    return f;
}

DeformationFamily akl_to_dk_family(int k) {
    if (k < 2 || k > 40) throw DomainError("akl_to_dk_family needs 2 ≤ k ≤ 40");
    DeformationFamily f;
    f.id = "akl-dk:" + std::to_string(k);
    f.ambient = 3;
    f.branches.push_back({STPoly(), STPoly(), tpow(1)});
    if (k % 2 == 0) {
        f.branches.push_back({tpow(2), tpow(k + 1), tpow(k - 1, kS)});
    } else {
        const int j = (k + 1) / 2;
        f.branches.push_back({tpow(1), tpow(j), tpow(j - 1, kS)});
        f.branches.push_back({tpow(1), -tpow(j), -tpow(j - 1, kS)});
    }
    Params a;
    a.k = k;
    a.wedge = 1;
    f.source = atlas().resolve("A_k", a).label;
    if (k == 2) {
        f.target = "A3";
    } else {
        Params d;
        d.n = 2;
        d.k = k % 2 == 0 ? (k - 2) / 2 : (k - 1) / 2;
        f.target = atlas().resolve(k % 2 == 0 ? "D_2k+3" : "D_2k+2", d).label;
    }
    f.kind = ArrowKind::Param;
    f.citation = "rank ((x^k, y, z), (y, x, s)) ≤ 1: A_k ∨ L deforms into D_{k+1}";
    return f;
}

DeformationFamily a_even_to_odd_family(int k) {
    if (k < 1) throw DomainError("k must be positive");
    const STPoly q = tpow(2) - STPoly(QPoly::monomial(1, 2));
    DeformationFamily f;
    f.id = "a2k:" + std::to_string(k);
    f.ambient = 2;
    f.branches.push_back({q, tpow(1) * q.pow(k)});
    f.source = "A" + std::to_string(2 * k);
    f.target = "A" + std::to_string(2 * k - 1);
    f.kind = ArrowKind::Both;
    f.citation = "A_{2k} deforms into A_{2k-1}";
    return f;
}

DeformationFamily extend_family(const MultiGerm& g, int branch, const QPoly& extra) {
    if (branch < 0 || branch >= g.branch_count()) throw DomainError("branch index out of range");
    DeformationFamily f;
    f.ambient = g.ambient() + 1;
    std::vector<Branch> target;
    for (int i = 0; i < g.branch_count(); ++i) {
        const auto& comps = exact_components(g.branch(i));
        auto c = lift_all(comps);
        auto t = comps;
        if (i == branch) {
            c.push_back(STPoly(kS) * lift(extra));
            t.push_back(extra);
        } else {
            c.emplace_back();
            t.emplace_back();
        }
        f.branches.push_back(std::move(c));
        target.emplace_back(std::move(t));
    }
    f.id = "extend";
    f.source = format_germ(g);
    f.target = format_germ(MultiGerm(f.ambient, std::move(target)));
    f.citation = "a further coordinate s·φ on one branch";
    return f;
}

DeformationFamily w8star_to_t7star_family() {
    const STPoly d = tpow(1) - STPoly(kS);
    DeformationFamily f;
    f.id = "W8*->T7*";
    f.ambient = 3;
    f.branches.push_back({tpow(2) * d.pow(2), tpow(3) * d.pow(2), tpow(4) * d.pow(3)});
    f.source = "W8*";
    f.target = "T7*";
    f.kind = ArrowKind::Both;
    f.citation = "W8* deforms into T7* by (t^2(t-s)^2, t^3(t-s)^2, t^4(t-s)^3)";
    return f;
}

DeformationFamily m5679_family() {
    const STPoly p = tpow(3) - STPoly(kS);
    DeformationFamily f;
    f.id = "(5,6,7,9)->L(3,1)";
    f.ambient = 4;
    f.branches.push_back({p * tpow(2), p.pow(2), p.pow(2) * tpow(1), p.pow(3)});
    f.source = "(5,6,7,9)";
    f.target = "L(3,1)";
    f.specializable = false;
    const STPoly mod = p;
    f.congruences.push_back({parse_mpoly("s*z - x^2", 4), mod, 3});
    f.congruences.push_back({parse_mpoly("w", 4), mod, 3});
    f.congruences.push_back({parse_mpoly("y", 4), mod, 2});
    f.citation = "(5,6,7,9) deforms into L_3^1: planar 2-jet modulo (t^3-s)^3";
    return f;
}

namespace {

std::vector<STPoly> m3_branch(bool printed) {
    const QPoly c = printed ? kS : QPoly::monomial(1, 2);
    const STPoly q = tpow(2) - STPoly(c * c);
    return {q.pow(2) * tpow(1), STPoly(), q.pow(2), q * (tpow(1) + STPoly(QPoly(2) * c))};
}

}  // namespace

DeformationFamily a2m3_family(bool printed) {
    DeformationFamily f;
    f.id = printed ? "lemma:A2+M3" : "lemma:A2+M3:s^2";
    f.ambient = 4;
    f.branches.push_back({tpow(2), tpow(3), STPoly(), tpow(1, QPoly(2) * kS)});
    f.branches.push_back(m3_branch(printed));
    f.source = "(2,3,-,-)+(5,-,4,3)";
    f.target = "L(3,1)";
    f.kind = ArrowKind::Param;
    f.citation = "the cusp and M3 of (2,3,-,-)+(5,-,4,3) deform into three tangent smooth branches";
    return f;
}

MPoly a2m3_surface(const Rational& last) {
    return parse_mpoly("12*x*s^6 - 3*w^2*s^4 - x*w + z^2 + 2*z*w*s^2 + " + last.get_str() + "*z*s^8", 4);
}

DeformationFamily m3_to_a3_family() {
    DeformationFamily f;
    f.id = "M3->A3";
    f.ambient = 4;
    f.branches.push_back(m3_branch(true));
    f.source = "(5,-,4,3)";
    f.target = "A3";
    f.citation = "M3 deforms into A3 by ((t^2-s^2)^2 t, 0, (t^2-s^2)^2, (t^2-s^2)(t+2s))";
    return f;
}

namespace {

DeformationFamily with_id(DeformationFamily f, std::string id, std::string source, std::string target,
                          ArrowKind kind) {
    f.id = std::move(id);
    f.source = std::move(source);
    f.target = std::move(target);
    f.kind = kind;
    return f;
}

std::vector<DeformationFamily> build_families() {
    std::vector<DeformationFamily> out;
    auto ext = [&](const std::string& id, const std::string& label, int branch, int e, const std::string& target) {
        out.push_back(with_id(extend_family(instantiate(label), branch, QPoly::monomial(1, e)), id, label, target,
                              ArrowKind::Param));
    };
    ext("extend:(5,6,7,8)", "(5,6,7,8)", 0, 9, "(5,6,7,8,9)");
    ext("extend:W8", "W8", 0, 7, "(4,5,6,7)");
    ext("extend:Z10", "Z10", 0, 9, "(4,6,7,9)");
    ext("extend:Z9", "Z9", 1, 4, "Z9(1)");
    ext("extend:W9", "W9", 1, 2, "(3,4,5,-)+(1,-,-,2)");
    ext("extend:E6", "E6", 0, 5, "E6(1)");
    ext("extend:E8", "E8", 0, 7, "E8(1)");
    ext("extend:E7", "E7", 1, 2, "E7(1)");

    auto wedge_of = [&](const std::string& id, const std::string& a, const std::string& b,
                        const std::string& source, const std::string& target) {
        out.push_back(with_id(wedge_family(parse_germ(a), parse_germ(b)), id, source, target, ArrowKind::Param));
    };
    wedge_of("wedge:M4+L", "(4,5,6,7)", "(-,-,-,1)", "(4,5,6,7)+(-,-,-,1)", "(4,5,6,7)∨L");
    wedge_of("wedge:A2+M3", "(2,3,-,-)", "(-,5,4,3)", "(2,3,-,-)+(-,5,4,3)", "A2∨M3");
    wedge_of("wedge:A2+L,A2", "(2,3,-,-)+(-,1,1,-)", "(-,-,3,2)", "(2,3,-,-)+(-,-,3,2)+(-,1,1,-)", "A2∨A2∨L");
    wedge_of("wedge:T9", "(2,3,-)", "(-,5,2)", "T9", "A2∨A4");
    wedge_of("wedge:T8", "(2,3,-)", "(-,-,1)+(-,2,1)", "T8", "A2∨A3");
    wedge_of("wedge:T7", "(2,3,-)", "(-,3,2)", "T7", "A2∨A2");

    out.push_back(w8star_to_t7star_family());
    for (int k = 2; k <= 5; ++k) out.push_back(akl_to_dk_family(k));
    for (int k = 1; k <= 3; ++k) out.push_back(a_even_to_odd_family(k));
    for (const auto& parts : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1}, {2, 1, 1}})
        out.push_back(partition_family(std::accumulate(parts.begin(), parts.end(), 0), parts));
    out.push_back(monomialize_family(Branch(std::vector<QPoly>{QPoly::monomial(1, 3), QPoly::monomial(1, 7),
                                                                QPoly::monomial(1, 8)})));
    out.back().id = "monomialize:(3,7,8)";
    out.push_back(monomialize_family(Branch(std::vector<QPoly>{QPoly::monomial(1, 4), QPoly::monomial(1, 6),
                                                                QPoly::monomial(1, 7)})));
    out.back().id = "monomialize:(4,6,7)";
    out.push_back(a2m3_family());
    out.push_back(m3_to_a3_family());
    out.push_back(m5679_family());
    return out;
}

}  // namespace

const std::vector<DeformationFamily>& shipped_families() {
    static const std::vector<DeformationFamily> families = build_families();
    return families;
}

const DeformationFamily* find_family(const std::string& id) {
    for (const auto& f : shipped_families())
        if (f.id == id) return &f;
    return nullptr;
}

MultiGerm germ_of(const std::string& label_or_notation) {
    try {
        return instantiate(atlas().resolve(label_or_notation));
    } catch (const DomainError&) {
        return parse_germ(label_or_notation);
    }
}

FamilyReport verify_family(const DeformationFamily& f) {
    FamilyReport rep;
    rep.id = f.id;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };
    auto check_fiber = [&](const Rational& s0, const std::string& label, std::optional<int>& d, int& count) {
        try {
            const MultiGerm fiber = specialize(f, s0);
            d = delta(fiber);
            count = fiber.branch_count();
            if (!signature_of(fiber).same_type(signature_of(germ_of(label))))
                fail("fiber at s = " + s0.get_str() + " is " + format_germ(fiber) + ", not of type " + label);
        } catch (const Error& e) {
            fail("fiber at s = " + s0.get_str() + ": " + e.what());
        }
    };
    check_fiber(0, f.source, rep.source_delta, rep.source_branches);
    for (const auto& c : f.congruences)
        if (!verify_congruence(f, c.form, c.modulus, c.power))
            fail("congruence " + c.form.to_string() + " ≢ 0 mod (" + to_string(c.modulus) + ")^" +
                 std::to_string(c.power));
    if (!f.specializable) return rep;
    check_fiber(f.sample_s, f.target, rep.target_delta, rep.target_branches);
    if (rep.source_delta && rep.target_delta) {
        if (*rep.target_delta > *rep.source_delta) fail("delta increases along the family");
        if (f.kind == ArrowKind::Both && *rep.target_delta != *rep.source_delta)
            fail("delta is not constant along a both-kind family");
        if (f.kind != ArrowKind::Curve && rep.target_branches < rep.source_branches)
            fail("branch count decreases along the family");
    }
    return rep;
}

std::string family_record(const DeformationFamily& f) {
    std::ostringstream os;
    os << "id=" << f.id << "\n"
       << "source=" << f.source << "\n"
       << "target=" << f.target << "\n"
       << "kind=" << to_string(f.kind) << "\n"
       << "ambient=" << f.ambient << "\n"
       << "citation=" << f.citation << "\n";
    for (std::size_t i = 0; i < f.branches.size(); ++i) {
        os << "branch" << i << "=(";
        for (std::size_t j = 0; j < f.branches[i].size(); ++j)
            os << (j ? ", " : "") << to_string(f.branches[i][j]);
        os << ")\n";
    }
    return os.str();
}

}  // namespace curvesing
