#pragma once

#include "curvesing/linalg.hpp"
#include "curvesing/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvesing {

/// Default truncation for branches given only as series.
inline constexpr int kDefaultTruncation = 64;

/// One parametrised branch: n component series in a local parameter, all with
/// zero constant term. Branches built from polynomials can be re-expanded to
/// any truncation.
class Branch {
public:
    explicit Branch(std::vector<Series> components);
    explicit Branch(std::vector<QPoly> components);

    int ambient() const { return static_cast<int>(components_.size()); }
    /// Largest order at which every component is known (unbounded for exact branches).
    int truncation() const;
    bool exact() const { return exact_.has_value(); }
    const std::vector<QPoly>& polynomials() const;

    /// Component j, known to order n; throws if n exceeds the available truncation.
    Series component(int j, int n) const;
    const std::vector<Series>& components() const { return components_; }

    /// Order of component j; nullopt if it vanishes to the available truncation.
    std::optional<int> order(int j) const;
    int multiplicity() const;

    /// Coefficient vector of t^k.
    Vec jet_coefficients(int k) const;

private:
    std::vector<Series> components_;
    std::optional<std::vector<QPoly>> exact_;
};

/// r branches in C^n through the origin.
class MultiGerm {
public:
    MultiGerm(int ambient, std::vector<Branch> branches);

    int ambient() const { return ambient_; }
    int branch_count() const { return static_cast<int>(branches_.size()); }
    const std::vector<Branch>& branches() const { return branches_; }
    const Branch& branch(int i) const { return branches_[static_cast<std::size_t>(i)]; }

    /// Sub-germ on the branches with the given indices.
    MultiGerm subgerm(const std::vector<int>& indices) const;
    /// Largest usable window for jet computations.
    int available_truncation() const;

private:
    int ambient_;
    std::vector<Branch> branches_;
};

/// Controls the doubling protocol shared by delta, semigroup and embedding dimension.
struct JetOptions {
    int start_window = 8;
    int max_window = 256;
};

struct SemigroupData {
    std::vector<int> generators;
    std::vector<int> gaps;
    int conductor = 0;
    bool symmetric = false;
    int delta() const { return static_cast<int>(gaps.size()); }
    bool contains(int k) const;
    friend bool operator==(const SemigroupData&, const SemigroupData&) = default;
};

/// Image of the curve algebra in the jets ⊕ Q[t_i]/t_i^{W+1}, as an echelon
/// basis. Coordinates are indexed branch-major: position i*(W+1)+k is t_i^k.
class JetAlgebra {
public:
    JetAlgebra(const MultiGerm& g, int window);

    int window() const { return window_; }
    std::size_t dimension() const { return algebra_.rank(); }
    int delta() const;
    /// Least c such that t_i^k lies in the image for all c ≤ k ≤ W (W+1 if none).
    int pure_threshold(int branch) const;
    /// Orders of elements of the image (branch 0 only meaningful for r = 1).
    std::vector<int> orders() const;
    /// Rank of the components modulo the square of the maximal ideal.
    int cotangent_rank() const;
    /// Linear forms l with l(X) in m^2, as a basis of Q^n.
    std::vector<Vec> second_order_forms() const;
    /// Greedy maximal set of component indices independent modulo m^2.
    std::vector<int> independent_components() const;
    /// Least c with t_i^k in m^2 for all c ≤ k ≤ W.
    int square_threshold(int branch) const;
    /// Orders of m that are not orders of m^2 (r = 1): the valuations of
    /// prepared coordinates, one per cotangent direction.
    std::vector<int> cotangent_orders() const;

private:
    Vec product(const Vec& a, const Vec& b) const;
    void close(EchelonBasis& basis, std::vector<Vec> seeds) const;

    int r_;
    int n_;
    int window_;
    std::vector<Vec> coords_;
    EchelonBasis algebra_;
    mutable std::optional<EchelonBasis> msquare_;
    const EchelonBasis& msquare() const;
};

int multiplicity(const Branch& b);

/// Jet algebra at the least window where delta and the cotangent space are
/// certified by the doubling protocol.
JetAlgebra certified_algebra(const MultiGerm& g, const JetOptions& opts = {});

/// Semigroup at a fixed window; throws StabilizationError if the window cannot certify the conductor.
SemigroupData value_semigroup(const Branch& b, int window);
/// Semigroup with automatic window doubling.
SemigroupData value_semigroup(const Branch& b, const JetOptions& opts = {});

int delta(const MultiGerm& g, const JetOptions& opts = {});
int embedding_dimension(const MultiGerm& g, const JetOptions& opts = {});

struct TangentData {
    std::vector<Vec> tangents;
    int span_dimension = 0;
};
TangentData tangent_data(const MultiGerm& g);

bool planar_2jet(const MultiGerm& g);

/// Finest partition of the branches into wedge summands, each part sorted and
/// parts ordered by least index. A bipartition is accepted when the Zariski
/// tangent spaces of the parts are independent and delta is additive (+1).
std::vector<std::vector<int>> decompose(const MultiGerm& g, const JetOptions& opts = {});

/// Cotangent orders of an irreducible germ at a certified window.
std::vector<int> cotangent_orders(const MultiGerm& g, const JetOptions& opts = {});

bool gorenstein_irreducible(const Branch& b, const JetOptions& opts = {});

/// Drops components that are dependent modulo m^2; the result has ambient
/// dimension equal to the embedding dimension.
MultiGerm stable_reduce(const MultiGerm& g, const JetOptions& opts = {});

/// Indices of a maximal set of components independent modulo m^2.
std::vector<int> independent_components(const MultiGerm& g, const JetOptions& opts = {});

/// Invariants of an indecomposable piece.
struct PieceSignature {
    int r = 0;
    std::vector<int> multiplicities;
    std::vector<std::vector<int>> semigroups;
    int delta = 0;
    int embedding_dimension = 0;
    int tangent_span = 0;
    bool planar_2jet = false;
    /// Sorted delta invariants of all branch pairs.
    std::vector<int> pair_deltas;
    /// Per branch: multiplicity, then dim(F^a ∩ T) for a = 1..3, where F^a is
    /// the osculating flag from the coefficients of order < 2m and T the span
    /// of all tangent lines.
    std::vector<std::vector<int>> flag_tangent;
    /// Per ordered pair (i, j): m_i, m_j, then dim(F_i^a ∩ F_j^b) for a, b = 1..3.
    std::vector<std::vector<int>> flag_contacts;
    auto operator<=>(const PieceSignature&) const = default;
};

struct Signature {
    int ambient = 0;
    PieceSignature whole;
    std::vector<PieceSignature> pieces;
    /// Equality of the discrete type, ignoring the ambient dimension.
    bool same_type(const Signature& o) const { return whole == o.whole && pieces == o.pieces; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const MultiGerm& g, const JetOptions& opts = {});
std::string to_string(const PieceSignature& s);
std::string to_string(const Signature& s);

}  // namespace curvesing
