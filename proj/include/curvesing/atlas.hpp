#pragma once

#include "curvesing/germ.hpp"
#include "curvesing/mpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace curvesing {

/// Family parameters. Each entry reads only the ones it declares; `wedge`
/// adds that many lines on fresh axes to entries that allow it.
struct Params {
    int k = 1;
    int n = 3;
    Rational lambda = 2;
    int wedge = 0;
};

enum class EntryTag { Simple, Confining, PlaneFlag, NonSimpleExample };

std::string to_string(EntryTag tag);

/// Closed-form invariants an instance must reproduce.
struct ExpectedInvariants {
    int r = 0;
    int delta = 0;
    int embedding_dimension = 0;
    std::vector<int> multiplicities;  // sorted
};

/// Defining equations of an instance, in the coordinates x,y,z (z1..zn).
/// `frame` is a linear change applied to the parametrisation before
/// substitution, for rows whose equations use other coordinates.
struct EntryEquations {
    std::vector<MPoly> polynomials;
    std::optional<std::vector<std::vector<MPoly>>> matrix;
    std::optional<std::vector<std::vector<Rational>>> frame;
};

struct AtlasEntry {
    std::string label;
    std::vector<std::string> aliases;
    EntryTag tag = EntryTag::Simple;
    /// Part of the classification the entry belongs to.
    std::string group;
    std::optional<int> k_min;
    std::optional<int> n_min;
    bool uses_lambda = false;
    bool wedgeable = false;
    /// Name used in the table of indecomposable space curves, if any.
    std::optional<std::string> table_name;

    std::function<MultiGerm(const Params&)> build;
    std::function<ExpectedInvariants(const Params&)> expected;
    std::function<std::optional<EntryEquations>(const Params&)> equations;
    /// Concrete label of an instance (without the wedge suffix).
    std::function<std::string(const Params&)> name;
    /// Other presentations of the same type, as germ notation.
    std::function<std::vector<std::string>(const Params&)> variants;

    bool uses_k() const { return k_min.has_value(); }
    bool uses_n() const { return n_min.has_value(); }
    /// Concrete label including any wedge suffix.
    std::string display(const Params& p) const;
    /// Throws DomainError when p is outside the declared range.
    void check_params(const Params& p) const;
};

enum class ArrowKind { Both, Param, Curve };

std::string to_string(ArrowKind kind);

struct AdjacencyEdge {
    std::string source;
    std::string target;
    ArrowKind kind = ArrowKind::Both;
    /// Diagram or statement the edge is transcribed from.
    std::string citation;
    /// Id of a deformation family witnessing the edge.
    std::optional<std::string> witness;
};

/// One concrete member of the atlas.
struct Instance {
    const AtlasEntry* entry = nullptr;
    Params params;
    std::string label;
};

struct CatalogueBounds {
    int k_max = 6;
    int n_max = 4;
    int wedge_max = 2;
};

struct VerificationReport {
    std::string label;
    bool ok = true;
    int equations_checked = 0;
    std::vector<std::string> failures;
};

class Atlas {
public:
    Atlas();

    const std::vector<AtlasEntry>& entries() const { return entries_; }
    /// Entry by label or alias ("∨" may be written "v").
    const AtlasEntry* find(const std::string& label) const;
    /// Concrete instance by family label plus params, or by concrete label.
    Instance resolve(const std::string& label, const Params& params = {}) const;

    /// All instances within the bounds, in entry order.
    std::vector<Instance> catalogue(const CatalogueBounds& bounds = {}) const;
    /// Instances of the table of indecomposable space curves (k ≤ 3 for the S rows).
    std::vector<Instance> table_rows() const;

    const std::vector<AdjacencyEdge>& adjacency_graph() const { return edges_; }
    std::vector<AdjacencyEdge> edges_from(const std::string& label) const;

    /// Confining curves for parametrisations in C^n plus, for n = 2, the plane flag.
    std::vector<Instance> confining_set(int n, const Rational& lambda = 2) const;

private:
    std::vector<AtlasEntry> entries_;
    std::vector<AdjacencyEdge> edges_;
};

const Atlas& atlas();

MultiGerm instantiate(const std::string& label, const Params& params = {});
MultiGerm instantiate(const Instance& inst);

/// C1 ∨ C2: the two germs on complementary coordinate spaces.
MultiGerm wedge(const MultiGerm& a, const MultiGerm& b);
/// C ∨ L_w^w.
MultiGerm wedge_lines(const MultiGerm& g, int w);

/// Equation, rank and invariant checks for one instance; entries with λ are
/// also checked at λ = 3.
VerificationReport verify_entry(const Instance& inst);

/// Signature collisions among the simple catalogue instances, one group per line.
std::vector<std::vector<std::string>> ambiguity_report(const CatalogueBounds& bounds = {});

std::string adjacency_dot(const std::vector<AdjacencyEdge>& edges);
/// Structured text record of one instance.
std::string atlas_record(const Instance& inst);

}  // namespace curvesing
