#pragma once

#include "curvesing/germ.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvesing {

/// Local plane branch (x(t), y(t)) with zero constant terms.
struct PlaneBranch {
    Series x;
    Series y;
    int multiplicity() const;
};

/// One blow-up of a branch at the origin.
struct BlowupStep {
    /// 'A' when ord x ≤ ord y (coordinates x, y/x), 'B' otherwise (x/y, y).
    char chart = 'A';
    /// Position of the next centre on the exceptional curve; nullopt for the point at infinity.
    std::optional<Rational> centre;
    /// Strict transform recentred at the next centre.
    PlaneBranch next;
};

BlowupStep blowup_branch(const PlaneBranch& b);

struct NearPoint {
    int id = 0;
    int parent = -1;
    /// Centre label on the parent's exceptional curve: "root", "c" for a finite slope, "inf".
    std::string point = "root";
    std::vector<int> branches;
    std::vector<PlaneBranch> local;
    int exceptional = 0;
    int multiplicity = 0;
    bool satellite = false;
    bool free = false;
    bool leaf = false;
    int total_multiplicity() const { return multiplicity + exceptional; }
};

struct ResolutionTree {
    std::vector<NearPoint> nodes;
    /// Node ids visited by each branch, from the root to its leaf.
    std::vector<std::vector<int>> paths;
    int branch_count() const { return static_cast<int>(paths.size()); }
    int satellite_count() const;
};

/// Plane branches of a germ in C^2, expanded to the given truncation.
std::vector<PlaneBranch> plane_branches(const MultiGerm& g, int truncation = 192);

ResolutionTree resolution_tree(const MultiGerm& g);
std::vector<int> multiplicity_sequence(const ResolutionTree& tree, int branch);
std::vector<int> multiplicity_sequence(const Branch& b);
int wall_modality(const ResolutionTree& tree);
bool bpv_simple(const ResolutionTree& tree);
/// "A0", "A<k>", "D<k>", "E6", "E7", "E8", or nullopt.
std::optional<std::string> ade_recognize(const ResolutionTree& tree);

/// Breadth-first node listing, one line per node.
std::string export_tree(const ResolutionTree& tree);

}  // namespace curvesing
