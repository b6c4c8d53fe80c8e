#include "curvesing/germ.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <sstream>

namespace curvesing {

namespace {

constexpr int kUnbounded = INT_MAX / 4;

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Branch

Branch::Branch(std::vector<Series> components) : components_(std::move(components)) {
    if (components_.empty()) throw DomainError("branch needs at least one component");
    bool nonzero = false;
    for (const auto& c : components_) {
        if (!is_zero(c.coeff(0))) throw DomainError("branch component has nonzero constant term");
        nonzero = nonzero || !c.zero_mod_truncation();
    }
    if (!nonzero) throw DomainError("branch vanishes identically to its truncation");
}

Branch::Branch(std::vector<QPoly> components) {
    if (components.empty()) throw DomainError("branch needs at least one component");
    bool nonzero = false;
    for (const auto& c : components) {
        if (!is_zero(c.coeff(0))) throw DomainError("branch component has nonzero constant term");
        nonzero = nonzero || !c.zero();
        components_.push_back(Series::from_poly("t", std::max(kDefaultTruncation, c.degree()), c));
    }
    if (!nonzero) throw DomainError("branch is identically zero");
    exact_ = std::move(components);
}

int Branch::truncation() const {
    if (exact_) return kUnbounded;
    int n = kUnbounded;
    for (const auto& c : components_) n = std::min(n, c.truncation());
    return n;
}

const std::vector<QPoly>& Branch::polynomials() const {
    if (!exact_) throw DomainError("branch is not given by polynomials");
    return *exact_;
}

Series Branch::component(int j, int n) const {
    if (exact_) return Series::from_poly("t", n, (*exact_)[static_cast<std::size_t>(j)]);
    const Series& c = components_[static_cast<std::size_t>(j)];
    if (n > c.truncation())
        throw StabilizationError("branch known only to order " + std::to_string(c.truncation()) +
                                 ", order " + std::to_string(n) + " required");
    return c.truncated(n);
}

std::optional<int> Branch::order(int j) const {
    if (exact_) {
        const QPoly& p = (*exact_)[static_cast<std::size_t>(j)];
        if (p.zero()) return std::nullopt;
        int k = 0;
        while (is_zero(p.coeff(k))) ++k;
        return k;
    }
    return components_[static_cast<std::size_t>(j)].valuation();
}

int Branch::multiplicity() const {
    int m = kUnbounded;
    for (int j = 0; j < ambient(); ++j)
        if (auto o = order(j)) m = std::min(m, *o);
    return m;
}

Vec Branch::jet_coefficients(int k) const {
    Vec v;
    for (int j = 0; j < ambient(); ++j) {
        if (exact_) v.push_back((*exact_)[static_cast<std::size_t>(j)].coeff(k));
        else v.push_back(components_[static_cast<std::size_t>(j)].coeff(k));
    }
    return v;
}

int multiplicity(const Branch& b) { return b.multiplicity(); }

// ---------------------------------------------------------------- MultiGerm

MultiGerm::MultiGerm(int ambient, std::vector<Branch> branches)
    : ambient_(ambient), branches_(std::move(branches)) {
    if (branches_.empty()) throw DomainError("multi-germ needs at least one branch");
    for (const auto& b : branches_)
        if (b.ambient() != ambient_) throw DomainError("branches have different ambient dimensions");
}

MultiGerm MultiGerm::subgerm(const std::vector<int>& indices) const {
    std::vector<Branch> out;
    for (int i : indices) out.push_back(branch(i));
    return MultiGerm(ambient_, std::move(out));
}

int MultiGerm::available_truncation() const {
    int n = kUnbounded;
    for (const auto& b : branches_) n = std::min(n, b.truncation());
    return n;
}

// ---------------------------------------------------------------- semigroups

bool SemigroupData::contains(int k) const {
    if (k < 0) return false;
    return !std::binary_search(gaps.begin(), gaps.end(), k);
}

// ---------------------------------------------------------------- JetAlgebra

JetAlgebra::JetAlgebra(const MultiGerm& g, int window)
    : r_(g.branch_count()),
      n_(g.ambient()),
      window_(window),
      algebra_(static_cast<std::size_t>(g.branch_count()) * static_cast<std::size_t>(window + 1)) {
    if (window > g.available_truncation())
        throw StabilizationError("window " + std::to_string(window) + " exceeds branch truncation");
    const std::size_t w1 = static_cast<std::size_t>(window) + 1;
    for (int j = 0; j < n_; ++j) {
        Vec x(algebra_.length());
        for (int i = 0; i < r_; ++i) {
            const Series c = g.branch(i).component(j, window);
            for (std::size_t k = 0; k < w1; ++k) x[static_cast<std::size_t>(i) * w1 + k] = c.coeffs()[k];
        }
        coords_.push_back(std::move(x));
    }
    Vec one(algebra_.length());
    for (int i = 0; i < r_; ++i) one[static_cast<std::size_t>(i) * w1] = 1;
    close(algebra_, {one});
}

Vec JetAlgebra::product(const Vec& a, const Vec& b) const {
    const std::size_t w1 = static_cast<std::size_t>(window_) + 1;
    Vec out(a.size());
    for (int i = 0; i < r_; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * w1;
        for (std::size_t p = 0; p < w1; ++p) {
            if (is_zero(a[base + p])) continue;
            for (std::size_t q = 0; p + q < w1; ++q)
                if (!is_zero(b[base + q])) out[base + p + q] += a[base + p] * b[base + q];
        }
    }
    return out;
}

void JetAlgebra::close(EchelonBasis& basis, std::vector<Vec> seeds) const {
    std::size_t next = basis.rank();
    for (const auto& s : seeds) basis.insert(s);
    while (next < basis.rank()) {
        for (const auto& x : coords_) {
            Vec p = product(x, basis.rows()[next]);
            basis.insert(p);
        }
        ++next;
    }
}

const EchelonBasis& JetAlgebra::msquare() const {
    if (!msquare_) {
        EchelonBasis b(algebra_.length());
        std::vector<Vec> seeds;
        for (int j = 0; j < n_; ++j)
            for (int k = j; k < n_; ++k)
                seeds.push_back(product(coords_[static_cast<std::size_t>(j)],
                                        coords_[static_cast<std::size_t>(k)]));
        close(b, std::move(seeds));
        msquare_ = std::move(b);
    }
    return *msquare_;
}

int JetAlgebra::delta() const {
    return r_ * (window_ + 1) - static_cast<int>(algebra_.rank());
}

namespace {

int threshold(const EchelonBasis& basis, int branch, int window) {
    const std::size_t w1 = static_cast<std::size_t>(window) + 1;
    int c = window + 1;
    for (int k = window; k >= 0; --k) {
        Vec e(basis.length());
        e[static_cast<std::size_t>(branch) * w1 + static_cast<std::size_t>(k)] = 1;
        if (!basis.contains(e)) break;
        c = k;
    }
    return c;
}

}  // namespace

int JetAlgebra::pure_threshold(int branch) const { return threshold(algebra_, branch, window_); }

int JetAlgebra::square_threshold(int branch) const { return threshold(msquare(), branch, window_); }

std::vector<int> JetAlgebra::orders() const {
    std::vector<int> out;
    for (auto p : algebra_.pivots()) out.push_back(static_cast<int>(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> JetAlgebra::cotangent_orders() const {
    if (r_ != 1) throw DomainError("cotangent orders need an irreducible germ");
    std::vector<bool> square(algebra_.length(), false);
    for (auto p : msquare().pivots()) square[p] = true;
    std::vector<int> out;
    for (int k : orders())
        if (k > 0 && !square[static_cast<std::size_t>(k)]) out.push_back(k);
    return out;
}

std::vector<int> JetAlgebra::independent_components() const {
    EchelonBasis b = msquare();
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (b.insert(coords_[static_cast<std::size_t>(j)])) out.push_back(j);
    return out;
}

int JetAlgebra::cotangent_rank() const { return static_cast<int>(independent_components().size()); }

std::vector<Vec> JetAlgebra::second_order_forms() const {
    std::vector<Vec> residual;
    for (const auto& x : coords_) residual.push_back(msquare().reduce(x));
    std::vector<Vec> rows;
    for (std::size_t p = 0; p < algebra_.length(); ++p) {
        Vec row;
        for (const auto& r : residual) row.push_back(r[p]);
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
    return kernel(rows, static_cast<std::size_t>(n_));
}

// ---------------------------------------------------------------- protocol

JetAlgebra certified_algebra(const MultiGerm& g, const JetOptions& opts) {
    const int limit = std::min(g.available_truncation(), opts.max_window);
    int w = opts.start_window;
    if (2 * w > limit)
        throw StabilizationError("truncation " + std::to_string(limit) + " too small for window " +
                                 std::to_string(w));
    JetAlgebra low(g, w);
    while (2 * w <= limit) {
        JetAlgebra high(g, 2 * w);
        bool ok = low.delta() == high.delta() && low.cotangent_rank() == high.cotangent_rank();
        for (int i = 0; ok && i < g.branch_count(); ++i)
            ok = high.pure_threshold(i) <= w && high.square_threshold(i) <= w;
        if (ok) return high;
        low = std::move(high);
        w *= 2;
    }
    throw StabilizationError("jet computation did not stabilize up to window " +
                             std::to_string(w));
}

int delta(const MultiGerm& g, const JetOptions& opts) { return certified_algebra(g, opts).delta(); }

int embedding_dimension(const MultiGerm& g, const JetOptions& opts) {
    return certified_algebra(g, opts).cotangent_rank();
}

std::vector<int> cotangent_orders(const MultiGerm& g, const JetOptions& opts) {
    const JetAlgebra a = certified_algebra(g, opts);
    std::vector<int> out = a.cotangent_orders();
    if (static_cast<int>(out.size()) != a.cotangent_rank())
        throw StabilizationError("cotangent orders did not stabilize");
    return out;
}

SemigroupData value_semigroup(const Branch& b, int window) {
    const MultiGerm g(b.ambient(), {b});
    const JetAlgebra a(g, window);
    const std::vector<int> s = a.orders();
    std::vector<bool> in(static_cast<std::size_t>(window) + 1, false);
    for (int k : s) in[static_cast<std::size_t>(k)] = true;
    int c = window + 1;
    while (c > 0 && in[static_cast<std::size_t>(c) - 1]) --c;
    if (c > window) throw StabilizationError("window too small to find the conductor");
    SemigroupData d;
    d.conductor = c;
    for (int k = 1; k < c; ++k)
        if (!in[static_cast<std::size_t>(k)]) d.gaps.push_back(k);
    const int m = b.multiplicity();
    for (int k = 1; k <= std::min(window, c + m); ++k) {
        if (!in[static_cast<std::size_t>(k)]) continue;
        bool decomposable = false;
        for (int a1 = 1; a1 <= k / 2 && !decomposable; ++a1)
            decomposable = in[static_cast<std::size_t>(a1)] && in[static_cast<std::size_t>(k - a1)];
        if (!decomposable) d.generators.push_back(k);
    }
    if (c + d.generators.back() >= window)
        throw StabilizationError("window " + std::to_string(window) +
                                 " cannot certify conductor " + std::to_string(c));
    d.symmetric = true;
    for (int k = 0; k < c; ++k)
        if (d.contains(k) == d.contains(c - 1 - k)) d.symmetric = false;
    return d;
}

SemigroupData value_semigroup(const Branch& b, const JetOptions& opts) {
    const int limit = std::min(b.truncation(), opts.max_window);
    for (int w = opts.start_window; w <= limit; w *= 2) {
        try {
            return value_semigroup(b, w);
        } catch (const StabilizationError&) {
            if (2 * w > limit) throw;
        }
    }
    throw StabilizationError("semigroup did not stabilize");
}

bool gorenstein_irreducible(const Branch& b, const JetOptions& opts) {
    return value_semigroup(b, opts).symmetric;
}

// ---------------------------------------------------------------- tangents

TangentData tangent_data(const MultiGerm& g) {
    TangentData out;
    for (const auto& b : g.branches()) {
        Vec v = b.jet_coefficients(b.multiplicity());
        const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
        const Rational scale = 1 / *first;
        for (auto& x : v) x *= scale;
        out.tangents.push_back(std::move(v));
    }
    out.span_dimension = static_cast<int>(rank(out.tangents, static_cast<std::size_t>(g.ambient())));
    return out;
}

namespace {

/// Coordinates (a, b) of v in the basis p1, p2, if v lies in their span.
std::optional<std::pair<Rational, Rational>> plane_coordinates(const Vec& p1, const Vec& p2,
                                                                const Vec& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational det = p1[i] * p2[j] - p1[j] * p2[i];
            if (is_zero(det)) continue;
            const Rational a = (v[i] * p2[j] - v[j] * p2[i]) / det;
            const Rational b = (p1[i] * v[j] - p1[j] * v[i]) / det;
            for (std::size_t k = 0; k < n; ++k)
                if (a * p1[k] + b * p2[k] != v[k]) return std::nullopt;
            return std::pair{a, b};
        }
    }
    throw DomainError("plane basis is degenerate");
}

bool graph_feasible(const MultiGerm& g, const Vec& p1, const Vec& p2) {
    const std::size_t n = static_cast<std::size_t>(g.ambient());
    std::vector<const Branch*> smooth;
    for (const auto& b : g.branches()) {
        const int m = b.multiplicity();
        if (m == 1) smooth.push_back(&b);
        if (m == 2 && !plane_coordinates(p1, p2, b.jet_coefficients(2))) return false;
    }
    const std::size_t cols = 3 * n + 2 * smooth.size();
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t bi = 0; bi < smooth.size(); ++bi) {
        const auto ab = plane_coordinates(p1, p2, smooth[bi]->jet_coefficients(1));
        if (!ab) return false;
        const auto& [a, b] = *ab;
        const Vec w = smooth[bi]->jet_coefficients(2);
        for (std::size_t c = 0; c < n; ++c) {
            Vec row(cols);
            row[c] = a * a;
            row[n + c] = a * b;
            row[2 * n + c] = b * b;
            row[3 * n + 2 * bi] = p1[c];
            row[3 * n + 2 * bi + 1] = p2[c];
            rows.push_back(std::move(row));
            rhs.push_back(w[c]);
        }
    }
    return consistent(rows, rhs, cols);
}

}  // namespace

bool planar_2jet(const MultiGerm& g) {
    const TangentData td = tangent_data(g);
    const std::size_t n = static_cast<std::size_t>(g.ambient());
    if (td.span_dimension >= 3) return false;
    if (n <= 2) return true;
    EchelonBasis t(n);
    for (const auto& v : td.tangents) t.insert(v);
    if (td.span_dimension == 2) return graph_feasible(g, t.rows()[0], t.rows()[1]);
    // One tangent direction p: second-order data of smooth branches, scaled by
    // the square of the tangent coefficient, must agree modulo the plane.
    const Vec& p = t.rows()[0];
    std::optional<Vec> base;
    std::optional<Vec> direction;
    for (const auto& b : g.branches()) {
        if (b.multiplicity() != 1) continue;
        const Vec v = b.jet_coefficients(1);
        Rational a;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_zero(p[c])) {
                a = v[c] / p[c];
                break;
            }
        Vec w = b.jet_coefficients(2);
        for (auto& x : w) x /= a * a;
        if (!base) {
            base = w;
            continue;
        }
        Vec d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = w[c] - (*base)[c];
        if (!t.contains(d)) {
            direction = t.reduce(d);
            break;
        }
    }
    if (!direction) return true;
    return graph_feasible(g, p, *direction);
}

// ---------------------------------------------------------------- decomposition

namespace {

std::vector<int> mask_indices(unsigned mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

struct PartInfo {
    int delta = 0;
    std::vector<Vec> forms;
};

}  // namespace

std::vector<std::vector<int>> decompose(const MultiGerm& g, const JetOptions& opts) {
    const int r = g.branch_count();
    if (r > 16) throw DomainError("too many branches to decompose");
    const std::size_t n = static_cast<std::size_t>(g.ambient());
    const TangentData td = tangent_data(g);
    std::map<unsigned, PartInfo> cache;
    auto info = [&](unsigned mask) -> const PartInfo& {
        auto it = cache.find(mask);
        if (it != cache.end()) return it->second;
        const JetAlgebra a = certified_algebra(g.subgerm(mask_indices(mask)), opts);
        return cache.emplace(mask, PartInfo{a.delta(), a.second_order_forms()}).first->second;
    };
    auto tangent_rank = [&](unsigned mask) {
        std::vector<Vec> v;
        for (int i : mask_indices(mask)) v.push_back(td.tangents[static_cast<std::size_t>(i)]);
        return rank(v, n);
    };
    std::function<std::vector<std::vector<int>>(unsigned)> split = [&](unsigned mask) {
        if (std::popcount(mask) > 1) {
            const unsigned low = mask & (~mask + 1u);
            for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
                if (!(sub & low)) continue;
                const unsigned other = mask ^ sub;
                if (tangent_rank(sub) + tangent_rank(other) != tangent_rank(mask)) continue;
                if (info(mask).delta != info(sub).delta + info(other).delta + 1) continue;
                std::vector<Vec> forms = info(sub).forms;
                for (const auto& f : info(other).forms) forms.push_back(f);
                if (rank(forms, n) != n) continue;
                auto a = split(sub), b = split(other);
                a.insert(a.end(), b.begin(), b.end());
                return a;
            }
        }
        return std::vector<std::vector<int>>{mask_indices(mask)};
    };
    auto parts = split((1u << r) - 1u);
    std::sort(parts.begin(), parts.end());
    return parts;
}

std::vector<int> independent_components(const MultiGerm& g, const JetOptions& opts) {
    return certified_algebra(g, opts).independent_components();
}

MultiGerm stable_reduce(const MultiGerm& g, const JetOptions& opts) {
    const std::vector<int> keep = independent_components(g, opts);
    std::vector<Branch> out;
    for (const auto& b : g.branches()) {
        if (b.exact()) {
            std::vector<QPoly> comps;
            for (int j : keep) comps.push_back(b.polynomials()[static_cast<std::size_t>(j)]);
            out.emplace_back(std::move(comps));
        } else {
            std::vector<Series> comps;
            for (int j : keep) comps.push_back(b.components()[static_cast<std::size_t>(j)]);
            out.emplace_back(std::move(comps));
        }
    }
    return MultiGerm(static_cast<int>(keep.size()), std::move(out));
}

// ---------------------------------------------------------------- signatures

namespace {

/// Osculating flag of a branch of multiplicity m: the first independent
/// coefficient vectors among t^m..t^{2m-1}, at most three.
std::vector<Vec> osculating_flag(const Branch& b) {
    const int m = b.multiplicity();
    std::vector<Vec> out;
    EchelonBasis basis(static_cast<std::size_t>(b.ambient()));
    for (int k = m; k < 2 * m && out.size() < 3; ++k) {
        Vec v = b.jet_coefficients(k);
        if (basis.insert(v)) out.push_back(std::move(v));
    }
    return out;
}

int intersection_dimension(const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
    std::vector<Vec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return static_cast<int>(rank(a, static_cast<std::size_t>(n)) + rank(b, static_cast<std::size_t>(n)) -
                            rank(both, static_cast<std::size_t>(n)));
}

std::vector<Vec> first(const std::vector<Vec>& flag, int a) {
    return {flag.begin(), flag.begin() + std::min<std::ptrdiff_t>(a, static_cast<std::ptrdiff_t>(flag.size()))};
}

void add_flag_data(const MultiGerm& g, PieceSignature& p) {
    const int n = g.ambient();
    std::vector<std::vector<Vec>> flags;
    std::vector<int> mult;
    for (const auto& b : g.branches()) {
        flags.push_back(osculating_flag(b));
        mult.push_back(b.multiplicity());
    }
    const std::vector<Vec> tangents = tangent_data(g).tangents;
    for (int i = 0; i < p.r; ++i) {
        const auto& fi = flags[static_cast<std::size_t>(i)];
        std::vector<int> t{mult[static_cast<std::size_t>(i)]};
        for (int a = 1; a <= 3; ++a) t.push_back(intersection_dimension(first(fi, a), tangents, n));
        p.flag_tangent.push_back(std::move(t));
        for (int j = 0; j < p.r; ++j) {
            if (i == j) continue;
            const auto& fj = flags[static_cast<std::size_t>(j)];
            std::vector<int> c{mult[static_cast<std::size_t>(i)], mult[static_cast<std::size_t>(j)]};
            for (int a = 1; a <= 3; ++a)
                for (int bb = 1; bb <= 3; ++bb) c.push_back(intersection_dimension(first(fi, a), first(fj, bb), n));
            p.flag_contacts.push_back(std::move(c));
        }
    }
    std::sort(p.flag_tangent.begin(), p.flag_tangent.end());
    std::sort(p.flag_contacts.begin(), p.flag_contacts.end());
}

PieceSignature piece_signature(const MultiGerm& g, const JetOptions& opts) {
    PieceSignature p;
    p.r = g.branch_count();
    const JetAlgebra a = certified_algebra(g, opts);
    p.delta = a.delta();
    p.embedding_dimension = a.cotangent_rank();
    for (const auto& b : g.branches()) {
        p.multiplicities.push_back(b.multiplicity());
        p.semigroups.push_back(value_semigroup(b, opts).generators);
    }
    std::sort(p.multiplicities.begin(), p.multiplicities.end());
    std::sort(p.semigroups.begin(), p.semigroups.end());
    p.tangent_span = tangent_data(g).span_dimension;
    p.planar_2jet = planar_2jet(g);
    for (int i = 0; i < p.r; ++i)
        for (int j = i + 1; j < p.r; ++j) p.pair_deltas.push_back(delta(g.subgerm({i, j}), opts));
    std::sort(p.pair_deltas.begin(), p.pair_deltas.end());
    add_flag_data(g, p);
    return p;
}

}  // namespace

Signature signature_of(const MultiGerm& g, const JetOptions& opts) {
    Signature s;
    s.ambient = g.ambient();
    s.whole = piece_signature(g, opts);
    const auto parts = decompose(g, opts);
    if (parts.size() == 1) {
        s.pieces = {s.whole};
    } else {
        for (const auto& part : parts) s.pieces.push_back(piece_signature(g.subgerm(part), opts));
        std::sort(s.pieces.begin(), s.pieces.end());
    }
    return s;
}

std::string to_string(const PieceSignature& s) {
    std::ostringstream os;
    os << "r=" << s.r << " mult=[" << join(s.multiplicities) << "] semigroups=[";
    for (std::size_t i = 0; i < s.semigroups.size(); ++i)
        os << (i ? " " : "") << "<" << join(s.semigroups[i]) << ">";
    os << "] delta=" << s.delta << " emb=" << s.embedding_dimension
       << " tangent_span=" << s.tangent_span << " planar_2jet=" << (s.planar_2jet ? "yes" : "no")
       << " pair_deltas=[" << join(s.pair_deltas) << "] flags=[";
    for (std::size_t i = 0; i < s.flag_tangent.size(); ++i) os << (i ? " " : "") << join(s.flag_tangent[i]);
    os << "] contacts=[";
    for (std::size_t i = 0; i < s.flag_contacts.size(); ++i) os << (i ? " " : "") << join(s.flag_contacts[i]);
    os << "]";
    return os.str();
}

std::string to_string(const Signature& s) {
    std::ostringstream os;
    os << "n=" << s.ambient << " " << to_string(s.whole) << " pieces=" << s.pieces.size();
    return os.str();
}

}  // namespace curvesing
