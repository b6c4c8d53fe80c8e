#include "curvesing/classify.hpp"

#include "curvesing/deform.hpp"
#include "curvesing/notation.hpp"
#include "curvesing/plane.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <sstream>

namespace curvesing {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Simple: return "simple";
        case Verdict::NotSimple: return "not-simple";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::mutex cache_mutex;
std::map<std::string, Signature>& signature_cache() {
    static std::map<std::string, Signature> cache;
    return cache;
}

bool all_exact(const MultiGerm& g) {
    for (const auto& b : g.branches())
        if (!b.exact()) return false;
    return true;
}

Signature cached_signature(const MultiGerm& g, const JetOptions& opts) {
    if (!all_exact(g)) return signature_of(g, opts);
    const std::string key = format_germ(g);
    {
        std::lock_guard lock(cache_mutex);
        auto it = signature_cache().find(key);
        if (it != signature_cache().end()) return it->second;
    }
    Signature s = signature_of(g, opts);
    std::lock_guard lock(cache_mutex);
    return signature_cache().emplace(key, std::move(s)).first->second;
}

RuleHit hit(std::string rule, std::string citation, std::optional<std::string> target = std::nullopt) {
    return {std::move(rule), std::move(citation), std::move(target), std::nullopt};
}

std::optional<RuleHit> branch_rules(const Branch& b, bool whole, const JetOptions& opts) {
    const int m = b.multiplicity();
    const std::string who = whole ? "irreducible curve" : "branch";
    if (m >= 6)
        return hit(who + " of multiplicity at least 6",
                   "an irreducible curve of multiplicity at least 6 is not simple: M6 deforms into A2∨A2∨L_2^2");
    if (m < 3) return std::nullopt;
    const MultiGerm g(b.ambient(), {b});
    const std::vector<int> v = cotangent_orders(g, opts);
    const int emb = static_cast<int>(v.size());
    auto val = [&](int i) { return i <= emb ? v[static_cast<std::size_t>(i - 1)] : std::numeric_limits<int>::max(); };
    const std::string cite = "valuation bounds for irreducible curves in prepared coordinates";
    if (m == 5) {
        if (val(4) > 10) return hit(who + " of multiplicity 5 with v(φ4) > 10", cite, "L(5,3)");
        if (val(3) >= 8) return hit(who + " of multiplicity 5 with v(φ3) ≥ 8", cite, "L(4,2)");
    }
    if (m == 4 && val(3) > 8) return hit(who + " of multiplicity 4 with v(φ3) > 8", cite);
    if (m == 3 && emb >= 3 && val(3) > 9) return hit(who + " of multiplicity 3 with v(φ3) > 9", cite, "L(3,1)");
    return std::nullopt;
}

std::optional<Instance> plane_instance(const std::string& ade) {
    const char kind = ade[0];
    const int k = std::stoi(ade.substr(1));
    Params p;
    p.n = 2;
    if (kind == 'E' || ade == "A0") return atlas().resolve(ade);
    if (kind == 'A') {
        p.k = k;
        return atlas().resolve("A_k", p);
    }
    if (kind == 'D' && k >= 4) {
        p.k = k % 2 == 1 ? (k - 3) / 2 : (k - 2) / 2;
        if (p.k < 1) return std::nullopt;
        return atlas().resolve(k % 2 == 1 ? "D_2k+3" : "D_2k+2", p);
    }
    return std::nullopt;
}

bool simple_tag(EntryTag t) { return t == EntryTag::Simple; }

std::optional<std::string> family_from(const std::string& label) {
    for (const auto& f : shipped_families())
        if (f.source == label) return f.id;
    return std::nullopt;
}

}  // namespace

const Signature& catalogue_signature(const Instance& inst) {
    const MultiGerm g = instantiate(inst);
    const std::string key = format_germ(g);
    {
        std::lock_guard lock(cache_mutex);
        auto it = signature_cache().find(key);
        if (it != signature_cache().end()) return it->second;
    }
    Signature s = signature_of(g);
    std::lock_guard lock(cache_mutex);
    return signature_cache().emplace(key, std::move(s)).first->second;
}

std::optional<RuleHit> nonsimple_rules(const MultiGerm& g, const JetOptions& opts) {
    const int r = g.branch_count();
    int singular = 0, max_mult = 0;
    for (const auto& b : g.branches()) {
        const int m = b.multiplicity();
        if (m >= 2) ++singular;
        max_mult = std::max(max_mult, m);
    }
    if (max_mult >= 6)
        for (const auto& b : g.branches())
            if (b.multiplicity() >= 6) return branch_rules(b, r == 1, opts);
    if (r >= 4 && (singular >= 2 || max_mult >= 4))
        return hit("four or more branches with two singular components or one of multiplicity at least 4",
                   "a simple parametrisation with at least four branches has at most one singular component, "
                   "of multiplicity at most three",
                   "L(4,2)");
    if (singular >= 3)
        return hit("three or more singular components",
                   "a simple curve has at most two singular components (A2∨A2∨A2 is not simple)");
    for (const auto& b : g.branches())
        if (auto h = branch_rules(b, r == 1, opts)) return h;
    return std::nullopt;
}

ClassificationResult recognize(const MultiGerm& g, const CatalogueBounds& bounds, const JetOptions& opts) {
    ClassificationResult out;
    try {
        out.signature = cached_signature(g, opts);
    } catch (const StabilizationError& e) {
        out.reason = std::string("stabilization failed: ") + e.what();
        return out;
    }
    const PieceSignature& w = out.signature.whole;

    std::vector<Instance> simple, other;
    for (const auto& inst : atlas().catalogue(bounds)) {
        const auto ex = inst.entry->expected(inst.params);
        const int lines = inst.params.wedge;
        if (ex.r + lines != w.r || ex.delta + lines != w.delta || ex.embedding_dimension + lines != w.embedding_dimension)
            continue;
        if (!catalogue_signature(inst).same_type(out.signature)) continue;
        (simple_tag(inst.entry->tag) ? simple : other).push_back(inst);
    }
    if (simple.size() + other.size() > 1) {
        for (const auto& i : simple) out.candidates.push_back(i.label);
        for (const auto& i : other) out.candidates.push_back(i.label);
        out.reason = "signature matches several atlas entries";
        return out;
    }
    if (simple.size() == 1) {
        out.verdict = Verdict::Simple;
        out.match = simple[0];
        out.label = simple[0].label;
        return out;
    }
    if (other.size() == 1) {
        const Instance& i = other[0];
        out.verdict = Verdict::NotSimple;
        out.match = i;
        out.label = i.label;
        const bool confining = i.entry->tag != EntryTag::NonSimpleExample;
        std::optional<RuleHit> ruled = confining ? std::nullopt : nonsimple_rules(g, opts);
        RuleHit h = ruled ? *ruled
                          : hit(confining ? "confining curve" : "listed non-simple curve",
                                confining ? "confining curves have moduli" : "non-simple example " + i.label,
                                confining ? std::optional(i.label) : std::nullopt);
        if (!h.witness) h.witness = family_from(i.label);
        if (h.witness) h.target = find_family(*h.witness)->target;
        out.rule = std::move(h);
        return out;
    }

    if (w.embedding_dimension <= 2 && w.r >= 1) {
        MultiGerm plane = stable_reduce(g, opts);
        if (plane.ambient() == 2) {
            const auto tree = resolution_tree(plane);
            if (const auto ade = ade_recognize(tree)) {
                const auto inst = plane_instance(*ade);
                if (inst && catalogue_signature(*inst).same_type(out.signature)) {
                    out.verdict = Verdict::Simple;
                    out.match = inst;
                    out.label = inst->label;
                } else {
                    out.reason = "plane type " + *ade + " has no matching atlas instance";
                }
                return out;
            }
            if (w.delta > 4) {
                out.verdict = Verdict::NotSimple;
                out.rule = hit("plane curve not of type ADE", "the simple plane curve singularities are A, D, E",
                               std::nullopt);
                return out;
            }
        }
    }

    std::optional<RuleHit> h;
    try {
        h = nonsimple_rules(g, opts);
    } catch (const StabilizationError& e) {
        out.reason = std::string("stabilization failed: ") + e.what();
        return out;
    }
    if (h && w.delta > 4) {
        out.verdict = Verdict::NotSimple;
        out.rule = std::move(h);
        return out;
    }
    if (h) {
        out.reason = "rule \"" + h->rule + "\" applies but δ ≤ 4 curves are simple";
        return out;
    }
    out.reason = w.delta <= 4 ? "δ ≤ 4, so simple, but the type lies outside the catalogue bounds"
                              : "no rule applies";
    return out;
}

std::string classification_record(const ClassificationResult& r) {
    std::ostringstream os;
    os << "verdict=" << to_string(r.verdict) << "\n";
    if (!r.label.empty()) os << "label=" << r.label << "\n";
    if (r.rule) {
        os << "rule=" << r.rule->rule << "\n" << "citation=" << r.rule->citation << "\n";
        if (r.rule->target) os << "target=" << *r.rule->target << "\n";
        if (r.rule->witness) os << "witness=" << *r.rule->witness << "\n";
    }
    if (!r.candidates.empty()) {
        os << "candidates=";
        for (std::size_t i = 0; i < r.candidates.size(); ++i) os << (i ? ";" : "") << r.candidates[i];
        os << "\n";
    }
    if (!r.reason.empty()) os << "reason=" << r.reason << "\n";
    os << "signature=" << to_string(r.signature) << "\n";
    return os.str();
}

}  // namespace curvesing
