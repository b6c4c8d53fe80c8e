#include "curvesing/atlas.hpp"

#include "curvesing/notation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace curvesing {

std::string to_string(EntryTag tag) {
    switch (tag) {
        case EntryTag::Simple: return "simple";
        case EntryTag::Confining: return "confining";
        case EntryTag::PlaneFlag: return "plane-confining";
        case EntryTag::NonSimpleExample: return "non-simple";
    }
    return "?";
}

std::string to_string(ArrowKind kind) {
    switch (kind) {
        case ArrowKind::Both: return "both";
        case ArrowKind::Param: return "param";
        case ArrowKind::Curve: return "curve";
    }
    return "?";
}

namespace {

std::string lines_suffix(int w) {
    if (w <= 0) return "";
    return w == 1 ? "∨L" : "∨L_" + std::to_string(w);
}

std::string normalize_label(std::string s) {
    const std::pair<std::string, std::string> subs[] = {
        {"∨", "v"}, {"Ẽ", "~E"}, {" ", ""}, {"−", "-"}, {"…", "..."}};
    for (const auto& [from, to] : subs) {
        for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
            s.replace(p, from.size(), to);
    }
    return s;
}

std::string branch_text(const std::vector<std::string>& comps) {
    std::string out = "(";
    for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? "," : "") + comps[i];
    return out + ")";
}

std::vector<std::string> dashes(int n) { return std::vector<std::string>(static_cast<std::size_t>(n), "-"); }

/// Branch with the given leading components, padded with dashes to length n.
std::string head(const std::vector<std::string>& lead, int n) {
    auto c = dashes(n);
    std::copy(lead.begin(), lead.end(), c.begin());
    return branch_text(c);
}

/// Coordinate axes from..n-1, each as its own branch.
std::string axes_text(int from, int n) {
    std::string out;
    for (int i = from; i < n; ++i) {
        auto c = dashes(n);
        c[static_cast<std::size_t>(i)] = "1";
        out += "+" + branch_text(c);
    }
    return out;
}

/// Branch with `lead` then `fill` in the remaining components.
std::string tail_branch(const std::vector<std::string>& lead, const std::string& fill, int n) {
    std::vector<std::string> c(static_cast<std::size_t>(n), fill);
    std::copy(lead.begin(), lead.end(), c.begin());
    return "+" + branch_text(c);
}

/// "(1,...,1)"-style text used in labels.
std::string ones_label(const std::vector<std::string>& lead, const std::string& fill, int n) {
    std::vector<std::string> c(static_cast<std::size_t>(n), fill);
    std::copy(lead.begin(), lead.end(), c.begin());
    return branch_text(c);
}

std::string rational_text(const Rational& q) { return "(" + q.get_str() + ")"; }

/// Replaces every "L" in an equation template with the value of λ.
std::string with_lambda(std::string text, const Rational& lambda) {
    const std::string v = rational_text(lambda);
    for (std::size_t p = text.find('L'); p != std::string::npos; p = text.find('L', p + v.size()))
        text.replace(p, 1, v);
    return text;
}

EntryEquations polys(const std::vector<std::string>& eqs, int n = 3, const Rational& lambda = 2) {
    EntryEquations e;
    for (const auto& s : eqs) e.polynomials.push_back(parse_mpoly(with_lambda(s, lambda), n));
    return e;
}

EntryEquations matrix(const std::vector<std::vector<std::string>>& m, int n = 3,
                      const Rational& lambda = 2) {
    EntryEquations e;
    std::vector<std::vector<MPoly>> rows;
    for (const auto& row : m) {
        std::vector<MPoly> r;
        for (const auto& s : row) r.push_back(parse_mpoly(with_lambda(s, lambda), n));
        rows.push_back(std::move(r));
    }
    e.polynomials = minors_2x2(rows);
    e.matrix = std::move(rows);
    return e;
}

/// Multiplicities read off monomial notation: the least exponent of each branch.
std::vector<int> notation_multiplicities(const std::string& text) {
    std::vector<int> out;
    int best = 0;
    int cur = 0;
    bool in_number = false;
    auto flush = [&]() {
        if (in_number && (best == 0 || cur < best)) best = cur;
        cur = 0;
        in_number = false;
    };
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            cur = cur * 10 + (ch - '0');
            in_number = true;
            continue;
        }
        flush();
        if (ch == ')') {
            out.push_back(best);
            best = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExpectedInvariants fixed_expected(const std::string& notation, int delta, int emb) {
    ExpectedInvariants e;
    e.multiplicities = notation_multiplicities(notation);
    e.r = static_cast<int>(e.multiplicities.size());
    e.delta = delta;
    e.embedding_dimension = emb;
    return e;
}

ExpectedInvariants lines_expected(int r, int delta, int emb) {
    return {r, delta, emb, std::vector<int>(static_cast<std::size_t>(r), 1)};
}

MultiGerm lines_germ(const std::vector<std::vector<Rational>>& dirs) {
    std::vector<Branch> b;
    for (const auto& d : dirs) {
        std::vector<QPoly> c;
        for (const auto& a : d) c.push_back(QPoly::monomial(a, 1));
        b.emplace_back(c);
    }
    return MultiGerm(static_cast<int>(dirs.front().size()), std::move(b));
}

/// n+2 lines with Vandermonde directions (1, a, ..., a^{n-1}), a = 1..n+2.
MultiGerm generic_lines(int n) {
    std::vector<std::vector<Rational>> dirs;
    for (int a = 1; a <= n + 2; ++a) {
        std::vector<Rational> d;
        Rational p = 1;
        for (int j = 0; j < n; ++j, p *= a) d.push_back(p);
        dirs.push_back(d);
    }
    return lines_germ(dirs);
}

void check_lambda(const Rational& lambda) {
    if (lambda == 0 || lambda == 1) throw DomainError("λ must differ from 0 and 1");
}

struct Builder {
    std::vector<AtlasEntry>& out;

    AtlasEntry& add(AtlasEntry e) {
        out.push_back(std::move(e));
        return out.back();
    }

    /// Entry given by one fixed notation.
    AtlasEntry& fixed(const std::string& label, const std::string& notation, int delta, int emb,
                      const std::string& group, EntryTag tag = EntryTag::Simple) {
        AtlasEntry e;
        e.label = label;
        if (label != notation) e.aliases.push_back(notation);
        e.tag = tag;
        e.group = group;
        e.build = [notation](const Params&) { return parse_germ(notation); };
        e.expected = [notation, delta, emb](const Params&) { return fixed_expected(notation, delta, emb); };
        e.name = [label](const Params&) { return label; };
        return add(std::move(e));
    }
};

void add_sporadic(Builder& b) {
    const std::string irr = "sporadic: irreducible curves";
    b.fixed("(5,6,7,8,9)", "(5,6,7,8,9)", 4, 5, irr);
    b.fixed("(5,6,7,8)", "(5,6,7,8)", 5, 4, irr);
    b.fixed("(4,5,6,7)", "(4,5,6,7)", 3, 4, irr);
    auto& w8 = b.fixed("W8", "(4,5,6)", 4, 3, irr);
    w8.table_name = "W8";
    w8.equations = [](const Params&) { return std::optional(polys({"y^2-x*z", "z^2-x^3"})); };
    auto& w8s = b.fixed("W8*", "(4,5,7)", 4, 3, irr);
    w8s.table_name = "W8*";
    w8s.equations = [](const Params&) {
        return std::optional(matrix({{"x", "y", "z"}, {"z", "x^2", "y^2"}}));
    };
    b.fixed("(4,6,7,9)", "(4,6,7,9)", 4, 4, irr);
    auto& z10 = b.fixed("Z10", "(4,6,7)", 5, 3, irr);
    z10.table_name = "Z10";
    z10.equations = [](const Params&) { return std::optional(polys({"y^2-x^3", "z^2-y*x^2"})); };
    auto& e12 = b.fixed("E12(2)", "(3,7,8)", 4, 3, irr);
    e12.table_name = "E12(2)";
    e12.equations = [](const Params&) {
        return std::optional(matrix({{"x^2", "y", "z"}, {"y", "z", "x^3"}}));
    };

    const std::string four = "sporadic: one branch of multiplicity four and a line";
    b.fixed("(4,5,7)∨L", "(4,5,7,-)+(-,-,-,1)", 5, 4, four);
    b.fixed("(4,5,6)∨L", "(4,5,6,-)+(-,-,-,1)", 5, 4, four);
    b.fixed("(4,5,6,7)∨L", "(4,5,6,7,-)+(-,-,-,-,1)", 4, 5, four);
    b.fixed("(4,5,6,7)+(-,-,1,-)", "(4,5,6,7)+(-,-,1,-)", 5, 4, four);
    b.fixed("(4,5,6,7)+(-,-,-,1)", "(4,5,6,7)+(-,-,-,1)", 5, 4, four);

    const std::string three = "sporadic: one branch of multiplicity three and a cusp";
    b.fixed("A2∨M3", "(2,3,-,-,-)+(-,-,3,4,5)", 4, 5, three);
    b.fixed("(2,3,-,-)+(-,5,4,3)", "(2,3,-,-)+(-,5,4,3)", 5, 4, three);
    b.fixed("(2,3,-,-)+(-,4,5,3)", "(2,3,-,-)+(-,4,5,3)", 5, 4, three);

    const std::string cusps = "sporadic: two cusps and a line";
    b.fixed("(2,3,-,-)+(-,3,2,-)+(-,-,-,1)", "(2,3,-,-)+(-,3,2,-)+(-,-,-,1)", 5, 4, cusps);
    b.fixed("(2,3,-,-)+(3,-,2,-)+(-,-,-,1)", "(2,3,-,-)+(3,-,2,-)+(-,-,-,1)", 5, 4, cusps);
    b.fixed("(2,3,-,-)+(-,-,3,2)+(-,1,1,-)", "(2,3,-,-)+(-,-,3,2)+(-,1,1,-)", 5, 4, cusps);
    b.fixed("(2,3,-,-)+(-,-,3,2)+(1,-,1,-)", "(2,3,-,-)+(-,-,3,2)+(1,-,1,-)", 5, 4, cusps);
    b.fixed("A2∨A2∨L", "(2,3,-,-,-)+(-,-,2,3,-)+(-,-,-,-,1)", 4, 5, cusps);

    const std::string two = "sporadic: union of two A_k";
    b.fixed("A2∨A4", "(2,3,-,-)+(-,-,2,5)", 4, 4, two);
    auto& t9 = b.fixed("T9", "(2,3,-)+(-,5,2)", 5, 3, two);
    t9.table_name = "T9";
    t9.equations = [](const Params&) { return std::optional(polys({"x*z", "y^2-z^5-x^3"})); };
    b.fixed("A2∨A3", "(2,3,-,-)+(-,-,1,-)+(-,-,1,2)", 4, 4, two);
    auto& t8 = b.fixed("T8", "(2,3,-)+(-,-,1)+(-,2,1)", 5, 3, two);
    t8.table_name = "T8";
    t8.equations = [](const Params&) { return std::optional(polys({"x*z", "y^2-y*z^2-x^3"})); };
    auto& z9 = b.fixed("Z9", "(2,3,-)+(2,-,3)", 5, 3, two);
    z9.table_name = "Z9";
    z9.equations = [](const Params&) {
        auto e = polys({"y^2-x^3", "z^2-x^3"});
        e.frame = std::vector<std::vector<Rational>>{{1, 0, 0}, {0, 1, 1}, {0, 1, -1}};
        return std::optional(e);
    };
    b.fixed("Z9(1)", "(2,3,-,-)+(2,-,3,4)", 4, 4, two);
    b.fixed("A2∨A2", "(2,3,-,-)+(-,-,2,3)", 3, 4, two);
    auto& t7 = b.fixed("T7", "(2,3,-)+(-,3,2)", 4, 3, two);
    t7.table_name = "T7";
    t7.variants = [](const Params&) { return std::vector<std::string>{"(3,2,-)+(3,-,2)"}; };
    t7.equations = [](const Params&) { return std::optional(polys({"x*z", "y^2-z^3-x^3"})); };
    auto& t7s = b.fixed("T7*", "(2,3,-)+(-,2,3)", 4, 3, two);
    t7s.table_name = "T7*";
    t7s.variants = [](const Params&) { return std::vector<std::string>{"(2,3,-)+(3,-,2)"}; };
    t7s.equations = [](const Params&) {
        return std::optional(matrix({{"x", "y", "z"}, {"0", "z", "y^2-x^3"}}));
    };

    const std::string other = "sporadic: other curves";
    b.fixed("(3,4,5,-)+(1,-,-,2)", "(3,4,5,-)+(1,-,-,2)", 4, 4, other);
    auto& w9 = b.fixed("W9", "(3,4,5)+(1,-,-)", 5, 3, other);
    w9.table_name = "W9";
    w9.equations = [](const Params&) { return std::optional(polys({"y^2-x*z", "z^2-y*x^2"})); };
    auto& j20 = b.fixed("J20(2)", "(1,-,-)+(1,2,-)+(1,-,2)", 4, 3, other);
    j20.aliases.push_back("S3t");
    j20.table_name = "J20(2)";
    j20.equations = [](const Params&) {
        return std::optional(matrix({{"z", "y-x^2", "0"}, {"0", "x^2-z", "y"}}));
    };
    auto& j21 = b.fixed("J21(2)", "(2,5,-)+(1,-,2)", 4, 3, other);
    j21.table_name = "J21(2)";
    j21.equations = [](const Params&) {
        return std::optional(matrix({{"z", "y", "x^3"}, {"0", "x^2-z", "y"}}));
    };
}

void add_type_e(Builder& b) {
    const std::string grp = "series: indecomposable curves of type E";
    auto wedgeable = [](AtlasEntry& e) -> AtlasEntry& {
        e.wedgeable = true;
        return e;
    };
    wedgeable(b.fixed("E6", "(3,4)", 3, 2, grp));
    wedgeable(b.fixed("E7", "(2,3)+(1,-)", 4, 2, grp));
    wedgeable(b.fixed("E8", "(3,5)", 4, 2, grp));
    auto& e61 = wedgeable(b.fixed("E6(1)", "(3,4,5)", 2, 3, grp));
    e61.aliases.push_back("M3");
    e61.table_name = "E6(1)";
    e61.equations = [](const Params&) {
        return std::optional(matrix({{"x", "y", "z"}, {"y", "z", "x^2"}}));
    };
    auto& e71 = wedgeable(b.fixed("E7(1)", "(2,3,-)+(1,-,2)", 3, 3, grp));
    e71.table_name = "E7(1)";
    e71.equations = [](const Params&) {
        return std::optional(matrix({{"z", "x", "y"}, {"0", "y", "x^2-z"}}));
    };
    auto& e81 = wedgeable(b.fixed("E8(1)", "(3,5,7)", 3, 3, grp));
    e81.table_name = "E8(1)";
    e81.equations = [](const Params&) {
        return std::optional(matrix({{"x", "y", "z"}, {"y", "z", "x^3"}}));
    };
}

/// Series parametrised by the embedding dimension n: C ∨ L_{n-c}^{n-c} plus one extra line.
struct SeriesSpec {
    std::string label;
    std::string table_name;  // name at n = 3
    std::string core_label;  // C in labels
    std::vector<std::string> core;  // leading components of the core branches
    int core_dim;
    std::vector<std::string> extra_lead;
    std::string extra_fill;
    int delta_offset;  // delta = n + offset
    std::vector<int> core_mults;
    int n_min;
    std::function<std::optional<EntryEquations>(const Params&)> equations;
};

void add_series(Builder& b, const SeriesSpec& s, const std::string& group) {
    AtlasEntry e;
    e.label = s.label;
    e.tag = EntryTag::Simple;
    e.group = group;
    e.n_min = s.n_min;
    e.wedgeable = true;
    e.table_name = s.table_name;
    // Core branches are stored as comma-separated component lists.
    e.build = [s](const Params& p) {
        std::string text;
        for (std::size_t i = 0; i < s.core.size(); ++i) {
            std::vector<std::string> comps;
            std::stringstream ss(s.core[i]);
            for (std::string c; std::getline(ss, c, ',');) comps.push_back(c);
            text += (i ? "+" : "") + head(comps, p.n);
        }
        text += axes_text(s.core_dim, p.n);
        text += tail_branch(s.extra_lead, s.extra_fill, p.n);
        return parse_germ(text);
    };
    e.expected = [s](const Params& p) {
        ExpectedInvariants x;
        x.multiplicities = s.core_mults;
        for (int i = s.core_dim; i < p.n; ++i) x.multiplicities.push_back(1);
        x.multiplicities.push_back(1);
        std::sort(x.multiplicities.begin(), x.multiplicities.end());
        x.r = static_cast<int>(x.multiplicities.size());
        x.delta = p.n + s.delta_offset;
        x.embedding_dimension = p.n;
        return x;
    };
    e.name = [s](const Params& p) {
        if (p.n == 3 && !s.table_name.empty()) return s.table_name;
        const int w = p.n - s.core_dim;
        return s.core_label + (w > 0 ? "∨L" + (w > 1 ? "_" + std::to_string(w) : std::string()) : "") +
               "+" + ones_label(s.extra_lead, s.extra_fill, p.n);
    };
    if (s.equations) e.equations = s.equations;
    b.add(std::move(e));
}

void add_e_series(Builder& b) {
    const std::string grp = "series: deformations of E_k ∨ L";
    add_series(b, {"U9_n", "U9", "(3,5,7)", {"3,5,7"}, 3, {"-", "-"}, "1", 2, {3}, 3,
                   [](const Params& p) -> std::optional<EntryEquations> {
                       if (p.n != 3) return std::nullopt;
                       return polys({"y^2-x*z", "y*z-x^4"});
                   }},
               grp);
    add_series(b, {"U7*_n", "U7*", "(3,4,5)", {"3,4,5"}, 3, {"-", "1", "-"}, "1", 1, {3}, 3,
                   [](const Params& p) -> std::optional<EntryEquations> {
                       if (p.n != 3) return std::nullopt;
                       return matrix({{"x", "y", "z"}, {"z", "x^2", "x*y"}});
                   }},
               grp);
    add_series(b, {"U7_n", "U7", "(3,4,5)", {"3,4,5"}, 3, {"-", "-"}, "1", 1, {3}, 3,
                   [](const Params& p) -> std::optional<EntryEquations> {
                       if (p.n != 3) return std::nullopt;
                       return polys({"y^2-x*z", "y*z-x^3"});
                   }},
               grp);
    add_series(b, {"S6*_n", "S6*", "A2", {"2,3"}, 2, {"1", "-"}, "1", 1, {2}, 3,
                   [](const Params& p) -> std::optional<EntryEquations> {
                       if (p.n != 3) return std::nullopt;
                       return matrix({{"z", "x", "y"}, {"0", "y", "x^2-x*z"}});
                   }},
               grp);
    add_series(b, {"U8_n", "U8", "A2", {"2,3"}, 2, {"1", "-"}, "2", 2, {2}, 3,
                   [](const Params& p) -> std::optional<EntryEquations> {
                       if (p.n != 3) return std::nullopt;
                       return polys({"z*y", "y^2-x^3+z*x"});
                   }},
               grp);
}

void add_type_a(Builder& b) {
    AtlasEntry a0;
    a0.label = "A0";
    a0.aliases = {"L(1,1)"};
    a0.group = "series: indecomposable curves of type A";
    a0.build = [](const Params&) { return parse_germ("(1)"); };
    a0.expected = [](const Params&) { return lines_expected(1, 0, 1); };
    a0.name = [](const Params&) { return std::string("A0"); };
    b.add(std::move(a0));

    AtlasEntry a;
    a.label = "A_k";
    a.group = "series: indecomposable curves of type A";
    a.k_min = 1;
    a.wedgeable = true;
    a.build = [](const Params& p) {
        if (p.k % 2 == 0) return parse_germ("(2," + std::to_string(p.k + 1) + ")");
        return parse_germ("(1,-)+(1," + std::to_string((p.k + 1) / 2) + ")");
    };
    a.expected = [](const Params& p) {
        const int j = (p.k + 1) / 2;
        if (p.k % 2 == 0) return ExpectedInvariants{1, j, 2, {2}};
        return ExpectedInvariants{2, j, 2, {1, 1}};
    };
    a.name = [](const Params& p) { return "A" + std::to_string(p.k); };
    b.add(std::move(a));
}

/// D-type series: A_m ∨ L_{n-2}^{n-2} + (-,1,...,1). Plane members are D_k,
/// members in C^3 are the S rows of the space-curve table.
void add_type_d(Builder& b) {
    const std::string grp = "series: deformations of D_k ∨ L";
    for (bool odd : {true, false}) {
        AtlasEntry e;
        e.label = odd ? "D_2k+3" : "D_2k+2";
        e.aliases = {odd ? "S_2k+4" : "S_2k+3"};
        e.group = grp;
        e.k_min = 1;
        e.n_min = 2;
        e.wedgeable = true;
        e.table_name = odd ? "S_{2k+4}" : "S_{2k+3}";
        if (!odd) {
            // For k = 1 the series is L_n^n plus the diagonal line.
            e.variants = [](const Params& p) {
                std::vector<std::string> out;
                if (p.k != 1) return out;
                std::string text = axes_text(0, p.n).substr(1);
                text += tail_branch({}, "1", p.n);
                out.push_back(text);
                return out;
            };
        }
        e.build = [odd](const Params& p) {
            std::string text = odd ? head({"2", std::to_string(2 * p.k + 1)}, p.n)
                                   : head({"1"}, p.n) + "+" + head({"1", std::to_string(p.k)}, p.n);
            text += axes_text(2, p.n);
            text += tail_branch({"-"}, "1", p.n);
            return parse_germ(text);
        };
        e.expected = [odd](const Params& p) {
            ExpectedInvariants x;
            x.multiplicities = odd ? std::vector<int>{2} : std::vector<int>{1, 1};
            for (int i = 2; i <= p.n; ++i) x.multiplicities.push_back(1);
            std::sort(x.multiplicities.begin(), x.multiplicities.end());
            x.r = static_cast<int>(x.multiplicities.size());
            x.delta = p.k + p.n;
            x.embedding_dimension = p.n;
            return x;
        };
        e.name = [odd](const Params& p) {
            const int index = odd ? 2 * p.k + 3 : 2 * p.k + 2;
            if (p.n == 2) return "D" + std::to_string(index);
            if (p.n == 3) return "S" + std::to_string(index + 1);
            const std::string core = odd ? "A" + std::to_string(2 * p.k) : "A" + std::to_string(2 * p.k - 1);
            const int w = p.n - 2;
            return core + "∨L" + (w > 1 ? "_" + std::to_string(w) : std::string()) + "+" +
                   ones_label({"-"}, "1", p.n);
        };
        e.equations = [odd](const Params& p) -> std::optional<EntryEquations> {
            if (p.n != 3) return std::nullopt;
            if (odd) return polys({"x*z", "y^2-x^" + std::to_string(2 * p.k + 1) + "-y*z"});
            return polys({"x*z", "y^2-y*x^" + std::to_string(p.k) + "-y*z"});
        };
        b.add(std::move(e));
    }
}

void add_confining(Builder& b) {
    const std::string grp = "confining curves L(n+2,n)";
    AtlasEntry l31;
    l31.label = "L(3,1)";
    l31.tag = EntryTag::Confining;
    l31.group = grp;
    l31.uses_lambda = true;
    l31.build = [](const Params& p) {
        check_lambda(p.lambda);
        std::vector<Branch> br;
        br.emplace_back(std::vector<QPoly>{QPoly(), QPoly::monomial(1, 1), QPoly()});
        br.emplace_back(std::vector<QPoly>{QPoly::monomial(1, 2), QPoly::monomial(1, 1), QPoly()});
        br.emplace_back(std::vector<QPoly>{QPoly::monomial(p.lambda, 2), QPoly::monomial(1, 1),
                                           QPoly::monomial(1, 3)});
        return MultiGerm(3, std::move(br));
    };
    l31.expected = [](const Params&) { return ExpectedInvariants{3, 5, 3, {1, 1, 1}}; };
    l31.equations = [](const Params& p) {
        return std::optional(matrix({{"z", "L*(L-1)*y", "L*x"}, {"0", "x-L*y^2", "L*z-x*y"}}, 3, p.lambda));
    };
    l31.name = [](const Params&) { return std::string("L(3,1)"); };
    b.add(std::move(l31));

    AtlasEntry l42;
    l42.label = "L(4,2)";
    l42.tag = EntryTag::Confining;
    l42.group = grp;
    l42.uses_lambda = true;
    l42.build = [](const Params& p) {
        check_lambda(p.lambda);
        std::vector<Branch> br;
        for (const auto& d : std::vector<std::vector<Rational>>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})
            br.push_back(lines_germ({d}).branch(0));
        br.emplace_back(std::vector<QPoly>{QPoly::monomial(p.lambda, 1), QPoly::monomial(1, 1),
                                           QPoly::monomial(1, 2)});
        return MultiGerm(3, std::move(br));
    };
    l42.expected = [](const Params&) { return lines_expected(4, 5, 3); };
    l42.equations = [](const Params& p) {
        return std::optional(matrix({{"z", "L*(x-y)", "y*(x-y)"}, {"0", "x-L*y", "z-y^2"}}, 3, p.lambda));
    };
    l42.name = [](const Params&) { return std::string("L(4,2)"); };
    b.add(std::move(l42));

    AtlasEntry ln;
    ln.label = "L(n+2,n)";
    ln.tag = EntryTag::Confining;
    ln.group = grp;
    ln.n_min = 3;
    ln.build = [](const Params& p) { return generic_lines(p.n); };
    ln.expected = [](const Params& p) { return lines_expected(p.n + 2, p.n + 3, p.n); };
    ln.name = [](const Params& p) {
        return "L(" + std::to_string(p.n + 2) + "," + std::to_string(p.n) + ")";
    };
    b.add(std::move(ln));

    const std::string plane = "confining plane curves";
    AtlasEntry e7;
    e7.label = "Ẽ7";
    e7.aliases = {"X9"};
    e7.tag = EntryTag::PlaneFlag;
    e7.group = plane;
    e7.uses_lambda = true;
    e7.build = [](const Params& p) {
        check_lambda(p.lambda);
        return lines_germ({{1, 0}, {0, 1}, {1, 1}, {1, p.lambda}});
    };
    e7.expected = [](const Params&) { return lines_expected(4, 6, 2); };
    e7.name = [](const Params&) { return std::string("Ẽ7"); };
    b.add(std::move(e7));

    AtlasEntry e8;
    e8.label = "Ẽ8";
    e8.aliases = {"J10"};
    e8.tag = EntryTag::PlaneFlag;
    e8.group = plane;
    e8.uses_lambda = true;
    e8.build = [](const Params& p) {
        check_lambda(p.lambda);
        std::vector<Branch> br;
        br.emplace_back(std::vector<QPoly>{QPoly(), QPoly::monomial(1, 1)});
        br.emplace_back(std::vector<QPoly>{QPoly::monomial(1, 2), QPoly::monomial(1, 1)});
        br.emplace_back(std::vector<QPoly>{QPoly::monomial(p.lambda, 2), QPoly::monomial(1, 1)});
        return MultiGerm(2, std::move(br));
    };
    e8.expected = [](const Params&) { return lines_expected(3, 6, 2); };
    e8.name = [](const Params&) { return std::string("Ẽ8"); };
    b.add(std::move(e8));
}

void add_nonsimple_examples(Builder& b) {
    const std::string grp = "non-simple examples";
    const auto tag = EntryTag::NonSimpleExample;
    b.fixed("M6", "(6,7,8,9,10,11)", 5, 6, grp, tag);
    b.fixed("(5,6,7,9)", "(5,6,7,9)", 5, 4, grp, tag);
    b.fixed("A2∨A2∨A2", "(2,3,-,-,-,-)+(-,-,2,3,-,-)+(-,-,-,-,2,3)", 5, 6, grp, tag);
    b.fixed("A3∨A3", "(1,-,-,-)+(1,2,-,-)+(-,-,1,-)+(-,-,1,2)", 5, 4, grp, tag);
    b.fixed("(3,7,8)∨L", "(3,7,8,-)+(-,-,-,1)", 5, 4, grp, tag);
    b.fixed("(4,6,7,9)∨L", "(4,6,7,9,-)+(-,-,-,-,1)", 5, 5, grp, tag);
    b.fixed("J20(2)∨L", "(1,-,-,-)+(1,2,-,-)+(1,-,2,-)+(-,-,-,1)", 5, 4, grp, tag);
    b.fixed("A2∨A4∨L", "(2,3,-,-,-)+(-,-,2,5,-)+(-,-,-,-,1)", 5, 5, grp, tag);
}

struct EdgeBuilder {
    const Atlas& atlas;
    std::vector<AdjacencyEdge>& out;

    std::string name(const std::string& label, const Params& p = {}) const {
        return atlas.resolve(label, p).label;
    }
    void edge(const std::string& s, const std::string& t, ArrowKind kind, const std::string& cite,
              std::optional<std::string> witness = std::nullopt) {
        out.push_back({s, t, kind, cite, std::move(witness)});
    }
};

void add_edges(EdgeBuilder& e) {
    using K = ArrowKind;
    const std::string irr = "diagram: irreducible sporadic curves";
    e.edge("(5,6,7,8)", "(5,6,7,8,9)", K::Param, irr, "extend:(5,6,7,8)");
    e.edge("(5,6,7,8,9)", "W8*", K::Both, irr);
    e.edge("(5,6,7,8)", "(4,6,7,9)", K::Param, irr);
    e.edge("W8", "(4,5,6,7)", K::Param, irr, "extend:W8");
    e.edge("W8*", "W8", K::Both, irr);
    e.edge("(4,6,7,9)", "W8*", K::Both, irr);
    e.edge("Z10", "(4,6,7,9)", K::Param, irr, "extend:Z10");
    e.edge("(4,6,7,9)", "E12(2)", K::Both, irr);

    const std::string four = "diagram: one branch of multiplicity four and a line";
    e.edge("(4,5,7)∨L", "(4,5,6,7)+(-,-,1,-)", K::Both, four);
    e.edge("(4,5,6,7)+(-,-,1,-)", "(4,5,6,7)+(-,-,-,1)", K::Both, four);
    e.edge("(4,5,7)∨L", "(4,5,6)∨L", K::Both, four);
    e.edge("(4,5,6,7)+(-,-,-,1)", "(4,5,6,7)∨L", K::Param, four, "wedge:M4+L");
    e.edge("(4,5,6)∨L", "(4,5,6,7)+(-,-,-,1)", K::Both, four);

    const std::string three = "diagram: one branch of multiplicity three and a cusp";
    e.edge("(2,3,-,-)+(-,4,5,3)", "(2,3,-,-)+(-,5,4,3)", K::Both, three);
    e.edge("(2,3,-,-)+(-,5,4,3)", "A2∨M3", K::Param, three, "wedge:A2+M3");

    const std::string cusps = "diagram: two cusps and a line";
    const std::string x1 = "(2,3,-,-)+(-,3,2,-)+(-,-,-,1)", x2 = "(2,3,-,-)+(3,-,2,-)+(-,-,-,1)",
                      x3 = "(2,3,-,-)+(-,-,3,2)+(-,1,1,-)", x4 = "(2,3,-,-)+(-,-,3,2)+(1,-,1,-)";
    e.edge(x2, x1, K::Both, cusps);
    e.edge(x1, x3, K::Both, cusps);
    e.edge(x2, x4, K::Both, cusps);
    e.edge(x4, x3, K::Both, cusps);
    e.edge(x3, "A2∨A2∨L", K::Param, cusps, "wedge:A2+L,A2");

    const std::string two = "diagram: union of two A_k";
    e.edge("T9", "A2∨A4", K::Param, two, "wedge:T9");
    e.edge("A2∨A4", "A2∨A3", K::Both, two);
    e.edge("T9", "T8", K::Both, two);
    e.edge("Z9", "Z9(1)", K::Param, two, "extend:Z9");
    e.edge("T8", "A2∨A3", K::Param, two, "wedge:T8");
    e.edge("A2∨A3", "A2∨A2", K::Curve, two);
    e.edge("T8", "T7", K::Curve, two);
    e.edge("Z9(1)", "T7*", K::Both, two);
    e.edge("T7*", "T7", K::Both, two);
    e.edge("T7", "A2∨A2", K::Param, two, "wedge:T7");

    const std::string other = "diagram: other sporadic curves";
    e.edge("W9", "(3,4,5,-)+(1,-,-,2)", K::Param, other, "extend:W9");
    e.edge("(3,4,5,-)+(1,-,-,2)", "J20(2)", K::Both, other);
    e.edge("W9", "J21(2)", K::Param, other);
    e.edge("J21(2)", "J20(2)", K::Both, other);

    const std::string te = "diagram: indecomposable curves of type E";
    e.edge("E6", "E6(1)", K::Param, te, "extend:E6");
    e.edge("E8(1)", "E6", K::Both, te);
    e.edge("E8", "E8(1)", K::Param, te, "extend:E8");
    e.edge("E8(1)", "E7(1)", K::Both, te);
    e.edge("E8", "E7", K::Both, te);
    e.edge("E7", "E7(1)", K::Param, te, "extend:E7");

    const std::string es = "diagram: deformations of E_k ∨ L";
    for (int n = 3; n <= 4; ++n) {
        Params p;
        p.n = n;
        e.edge(e.name("U9_n", p), e.name("U7*_n", p), K::Param, es);
        e.edge(e.name("U7*_n", p), e.name("U7_n", p), K::Both, es);
        e.edge(e.name("U8_n", p), e.name("S6*_n", p), K::Param, es);
    }

    const std::string ta = "list: indecomposable curves of type A";
    for (int k = 1; k <= 3; ++k) {
        Params a, b;
        a.k = 2 * k;
        b.k = 2 * k - 1;
        e.edge(e.name("A_k", a), e.name("A_k", b), K::Both, ta, "a2k:" + std::to_string(k));
    }

    const std::string td = "list: deformations of D_k ∨ L (direction as for type A)";
    for (int n = 2; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            Params p;
            p.n = n;
            p.k = k;
            e.edge(e.name("D_2k+3", p), e.name("D_2k+2", p), K::Both, td);
        }
    }

    e.edge("W8*", "T7*", K::Both, "statement: W8* deforms to T7*", "W8*->T7*");
    const std::string akl = "construction: A_k ∨ L deforms to D_{k+1}";
    for (int k = 2; k <= 5; ++k) {
        Params a;
        a.k = k;
        a.wedge = 1;
        std::string target;
        if (k == 2) target = "A3";
        else {
            Params d;
            d.n = 2;
            d.k = (k % 2 == 0) ? (k - 2) / 2 : (k - 1) / 2;
            target = e.name(k % 2 == 0 ? "D_2k+3" : "D_2k+2", d);
        }
        e.edge(e.name("A_k", a), target, K::Param, akl, "akl-dk:" + std::to_string(k));
    }
}

}  // namespace

std::string AtlasEntry::display(const Params& p) const { return name(p) + lines_suffix(p.wedge); }

void AtlasEntry::check_params(const Params& p) const {
    if (k_min && p.k < *k_min)
        throw DomainError(label + ": k must be at least " + std::to_string(*k_min));
    if (n_min && p.n < *n_min)
        throw DomainError(label + ": n must be at least " + std::to_string(*n_min));
    if (uses_lambda) check_lambda(p.lambda);
    if (p.wedge < 0) throw DomainError(label + ": negative number of wedge lines");
    if (p.wedge > 0 && !wedgeable) throw DomainError(label + " does not admit wedge lines");
}

Atlas::Atlas() {
    Builder b{entries_};
    add_sporadic(b);
    add_type_e(b);
    add_e_series(b);
    add_type_a(b);
    add_type_d(b);
    add_confining(b);
    add_nonsimple_examples(b);
    EdgeBuilder e{*this, edges_};
    add_edges(e);
}

const AtlasEntry* Atlas::find(const std::string& label) const {
    const std::string key = normalize_label(label);
    for (const auto& e : entries_) {
        if (normalize_label(e.label) == key) return &e;
        for (const auto& a : e.aliases)
            if (normalize_label(a) == key) return &e;
    }
    return nullptr;
}

Instance Atlas::resolve(const std::string& label, const Params& params) const {
    if (const AtlasEntry* e = find(label)) {
        Params p = params;
        if (!e->wedgeable) p.wedge = 0;
        e->check_params(p);
        return {e, p, e->display(p)};
    }
    const std::string key = normalize_label(label);
    for (const auto& inst : catalogue())
        if (normalize_label(inst.label) == key) return inst;
    // "X∨L" or "X∨L_w" on top of a wedgeable entry.
    const std::string suffix = "vL";
    const std::size_t pos = key.rfind(suffix);
    if (pos != std::string::npos && pos > 0) {
        const std::string rest = key.substr(pos + suffix.size());
        int w = params.wedge > 0 ? params.wedge : 1;
        if (!rest.empty()) {
            if (rest[0] != '_') throw DomainError("unknown atlas label: " + label);
            w = std::stoi(rest.substr(1));
        }
        Instance base = resolve(key.substr(0, pos), params);
        Params p = base.params;
        p.wedge += w;
        base.entry->check_params(p);
        return {base.entry, p, base.entry->display(p)};
    }
    throw DomainError("unknown atlas label: " + label);
}

std::vector<Instance> Atlas::catalogue(const CatalogueBounds& bounds) const {
    std::vector<Instance> out;
    for (const auto& e : entries_) {
        const int k_lo = e.k_min.value_or(1), k_hi = e.uses_k() ? bounds.k_max : k_lo;
        const int n_lo = e.n_min.value_or(3), n_hi = e.uses_n() ? bounds.n_max : n_lo;
        const int w_hi = e.wedgeable ? bounds.wedge_max : 0;
        for (int k = k_lo; k <= k_hi; ++k)
            for (int n = n_lo; n <= n_hi; ++n)
                for (int w = 0; w <= w_hi; ++w) {
                    Params p;
                    p.k = k;
                    p.n = n;
                    p.wedge = w;
                    out.push_back({&e, p, e.display(p)});
                }
    }
    return out;
}

std::vector<Instance> Atlas::table_rows() const {
    std::vector<Instance> out;
    for (const auto& e : entries_) {
        if (!e.table_name) continue;
        Params p;
        p.n = 3;
        p.k = 1;
        out.push_back({&e, p, e.display(p)});
    }
    return out;
}

std::vector<AdjacencyEdge> Atlas::edges_from(const std::string& label) const {
    std::vector<AdjacencyEdge> out;
    for (const auto& e : edges_)
        if (normalize_label(e.source) == normalize_label(label)) out.push_back(e);
    return out;
}

std::vector<Instance> Atlas::confining_set(int n, const Rational& lambda) const {
    if (n < 1) throw DomainError("ambient dimension must be positive");
    std::vector<Instance> out;
    Params p;
    p.lambda = lambda;
    p.n = n;
    if (n == 1) out.push_back(resolve("L(3,1)", p));
    else if (n == 2) out.push_back(resolve("L(4,2)", p));
    else out.push_back(resolve("L(n+2,n)", p));
    if (n == 2) {
        out.push_back(resolve("Ẽ7", p));
        out.push_back(resolve("Ẽ8", p));
    }
    return out;
}

const Atlas& atlas() {
    static const Atlas instance;
    return instance;
}

MultiGerm wedge(const MultiGerm& a, const MultiGerm& b) {
    const int n = a.ambient() + b.ambient();
    std::vector<Branch> out;
    for (const auto& br : a.branches()) {
        std::vector<QPoly> c = br.polynomials();
        c.resize(static_cast<std::size_t>(n));
        out.emplace_back(c);
    }
    for (const auto& br : b.branches()) {
        std::vector<QPoly> c(static_cast<std::size_t>(a.ambient()));
        const auto& q = br.polynomials();
        c.insert(c.end(), q.begin(), q.end());
        out.emplace_back(c);
    }
    return MultiGerm(n, std::move(out));
}

MultiGerm wedge_lines(const MultiGerm& g, int w) {
    if (w <= 0) return g;
    std::vector<std::vector<Rational>> dirs;
    for (int i = 0; i < w; ++i) {
        std::vector<Rational> d(static_cast<std::size_t>(w), 0);
        d[static_cast<std::size_t>(i)] = 1;
        dirs.push_back(d);
    }
    return wedge(g, lines_germ(dirs));
}

MultiGerm instantiate(const Instance& inst) {
    inst.entry->check_params(inst.params);
    return wedge_lines(inst.entry->build(inst.params), inst.params.wedge);
}

MultiGerm instantiate(const std::string& label, const Params& params) {
    return instantiate(atlas().resolve(label, params));
}

namespace {

ExpectedInvariants expected_of(const Instance& inst) {
    ExpectedInvariants x = inst.entry->expected(inst.params);
    const int w = inst.params.wedge;
    x.r += w;
    x.delta += w;
    x.embedding_dimension += w;
    for (int i = 0; i < w; ++i) x.multiplicities.push_back(1);
    std::sort(x.multiplicities.begin(), x.multiplicities.end());
    return x;
}

void check_equations(const Instance& inst, const MultiGerm& g, VerificationReport& rep,
                     const std::string& tag) {
    if (!inst.entry->equations || inst.params.wedge > 0) return;
    const auto eqs = inst.entry->equations(inst.params);
    if (!eqs) return;
    for (int i = 0; i < g.branch_count(); ++i) {
        std::vector<QPoly> comps = g.branch(i).polynomials();
        if (eqs->frame) {
            std::vector<QPoly> framed;
            for (const auto& row : *eqs->frame) {
                QPoly v;
                for (std::size_t j = 0; j < row.size(); ++j) v += QPoly(row[j]) * comps[j];
                framed.push_back(v);
            }
            comps = std::move(framed);
        }
        std::vector<STPoly> st;
        for (const auto& c : comps) st.push_back(lift(c));
        for (std::size_t j = 0; j < eqs->polynomials.size(); ++j) {
            ++rep.equations_checked;
            const STPoly v = eqs->polynomials[j].substitute(st);
            if (!v.zero()) {
                rep.ok = false;
                rep.failures.push_back(tag + "branch " + std::to_string(i) + ": " +
                                       (eqs->matrix ? "minor " : "equation ") +
                                       eqs->polynomials[j].to_string() + " does not vanish");
            }
        }
        if (eqs->matrix) {
            bool nonzero = false;
            for (const auto& row : *eqs->matrix)
                for (const auto& m : row)
                    if (!m.substitute(st).zero()) nonzero = true;
            if (!nonzero) {
                rep.ok = false;
                rep.failures.push_back(tag + "branch " + std::to_string(i) + ": matrix vanishes identically");
            }
        }
    }
}

void check_invariants(const Instance& inst, const MultiGerm& g, VerificationReport& rep,
                      const std::string& tag) {
    const ExpectedInvariants x = expected_of(inst);
    const Signature sig = signature_of(g);
    auto fail = [&](const std::string& what, int want, int got) {
        rep.ok = false;
        rep.failures.push_back(tag + what + " expected " + std::to_string(want) + ", computed " +
                               std::to_string(got));
    };
    if (sig.whole.r != x.r) fail("branch count", x.r, sig.whole.r);
    if (sig.whole.delta != x.delta) fail("delta", x.delta, sig.whole.delta);
    if (sig.whole.embedding_dimension != x.embedding_dimension)
        fail("embedding dimension", x.embedding_dimension, sig.whole.embedding_dimension);
    if (sig.whole.multiplicities != x.multiplicities) {
        rep.ok = false;
        rep.failures.push_back(tag + "multiplicities differ from the expected ones");
    }
    if (inst.params.wedge > 0 || !inst.entry->variants) return;
    for (const auto& v : inst.entry->variants(inst.params)) {
        if (!signature_of(parse_germ(v)).same_type(sig)) {
            rep.ok = false;
            rep.failures.push_back(tag + "variant " + v + " has a different signature");
        }
    }
}

}  // namespace

VerificationReport verify_entry(const Instance& inst) {
    VerificationReport rep;
    rep.label = inst.label;
    try {
        const MultiGerm g = instantiate(inst);
        check_equations(inst, g, rep, "");
        check_invariants(inst, g, rep, "");
        if (inst.entry->uses_lambda && inst.params.lambda != 3) {
            Instance alt = inst;
            alt.params.lambda = 3;
            const MultiGerm g3 = instantiate(alt);
            check_equations(alt, g3, rep, "λ=3: ");
            check_invariants(alt, g3, rep, "λ=3: ");
        }
    } catch (const Error& e) {
        rep.ok = false;
        rep.failures.push_back(e.what());
    }
    return rep;
}

std::vector<std::vector<std::string>> ambiguity_report(const CatalogueBounds& bounds) {
    std::map<std::pair<PieceSignature, std::vector<PieceSignature>>, std::vector<std::string>> groups;
    for (const auto& inst : atlas().catalogue(bounds)) {
        if (inst.entry->tag != EntryTag::Simple) continue;
        const Signature s = signature_of(instantiate(inst));
        groups[{s.whole, s.pieces}].push_back(inst.label);
    }
    std::vector<std::vector<std::string>> out;
    for (auto& [key, labels] : groups)
        if (labels.size() > 1) out.push_back(labels);
    std::sort(out.begin(), out.end());
    return out;
}

std::string adjacency_dot(const std::vector<AdjacencyEdge>& edges) {
    std::vector<std::string> nodes;
    for (const auto& e : edges) {
        for (const auto& l : {e.source, e.target})
            if (std::find(nodes.begin(), nodes.end(), l) == nodes.end()) nodes.push_back(l);
    }
    std::ostringstream os;
    os << "digraph adjacency {\n";
    for (const auto& n : nodes) os << "  \"" << n << "\";\n";
    for (const auto& e : edges)
        os << "  \"" << e.source << "\" -> \"" << e.target << "\" [kind=\"" << to_string(e.kind) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string atlas_record(const Instance& inst) {
    std::ostringstream os;
    const AtlasEntry& e = *inst.entry;
    os << "label=" << inst.label << "\n";
    os << "family=" << e.label << "\n";
    os << "tag=" << to_string(e.tag) << "\n";
    os << "group=" << e.group << "\n";
    std::string params;
    if (e.uses_k()) params += "k=" + std::to_string(inst.params.k) + " ";
    if (e.uses_n()) params += "n=" + std::to_string(inst.params.n) + " ";
    if (e.uses_lambda) params += "lambda=" + inst.params.lambda.get_str() + " ";
    if (inst.params.wedge) params += "wedge=" + std::to_string(inst.params.wedge) + " ";
    if (!params.empty()) params.pop_back();
    os << "params=" << params << "\n";
    if (!e.aliases.empty()) {
        os << "aliases=";
        for (std::size_t i = 0; i < e.aliases.size(); ++i) os << (i ? "," : "") << e.aliases[i];
        os << "\n";
    }
    const MultiGerm g = instantiate(inst);
    os << "parametrisation=" << format_germ(g) << "\n";
    if (e.equations && inst.params.wedge == 0) {
        if (auto eqs = e.equations(inst.params)) {
            os << "equations=";
            for (std::size_t i = 0; i < eqs->polynomials.size(); ++i)
                os << (i ? "; " : "") << eqs->polynomials[i].to_string();
            os << "\n";
        }
    }
    os << "signature=" << to_string(signature_of(g)) << "\n";
    return os.str();
}

}  // namespace curvesing
