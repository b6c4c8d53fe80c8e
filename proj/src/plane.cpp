#include "curvesing/plane.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace curvesing {

namespace {

constexpr int kMinUsefulTruncation = 3;

/// Slope of the tangent of a smooth branch; nullopt is the vertical direction.
std::optional<Rational> tangent_slope(const PlaneBranch& b) {
    const Rational& a = b.x.coeff(1);
    if (is_zero(a)) return std::nullopt;
    return b.y.coeff(1) / a;
}

int shared_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
}

}  // namespace

int PlaneBranch::multiplicity() const {
    const auto ox = x.valuation(), oy = y.valuation();
    if (!ox && !oy) throw StabilizationError("plane branch vanishes to its truncation");
    if (!ox) return *oy;
    if (!oy) return *ox;
    return std::min(*ox, *oy);
}

BlowupStep blowup_branch(const PlaneBranch& b) {
    const auto ox = b.x.valuation(), oy = b.y.valuation();
    if (!ox && !oy) throw StabilizationError("truncation exhausted before recentering");
    BlowupStep step;
    if (ox && (!oy || *ox <= *oy)) {
        step.chart = 'A';
        Series q = divide(b.y, b.x);
        const Rational c = q.coeff(0);
        q.set_coeff(0, Rational(0));
        step.centre = c;
        step.next = PlaneBranch{b.x.truncated(q.truncation()), q};
    } else {
        step.chart = 'B';
        const Series q = divide(b.x, b.y);
        step.centre = std::nullopt;
        step.next = PlaneBranch{q, b.y.truncated(q.truncation())};
    }
    if (step.next.x.truncation() < kMinUsefulTruncation)
        throw StabilizationError("truncation exhausted during blow-up");
    return step;
}

std::vector<PlaneBranch> plane_branches(const MultiGerm& g, int truncation) {
    if (g.ambient() != 2) throw DomainError("resolution needs a plane germ (n = 2)");
    const int n = std::min(truncation, g.available_truncation());
    std::vector<PlaneBranch> out;
    for (const auto& b : g.branches()) out.push_back(PlaneBranch{b.component(0, n), b.component(1, n)});
    return out;
}

int ResolutionTree::satellite_count() const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                          [](const NearPoint& p) { return p.satellite; }));
}

ResolutionTree resolution_tree(const MultiGerm& g) {
    const std::vector<PlaneBranch> input = plane_branches(g);
    int max_mult = 0;
    for (const auto& b : input) max_mult = std::max(max_mult, b.multiplicity());
    const int bound = delta(g) + max_mult + 2;

    struct Pending {
        int parent;
        std::string point;
        bool ex, ey;
        std::vector<int> branches;
        std::vector<PlaneBranch> local;
    };
    ResolutionTree tree;
    tree.paths.resize(input.size());
    std::vector<int> all(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) all[i] = static_cast<int>(i);
    std::deque<Pending> queue{{-1, "root", false, false, all, input}};
    while (!queue.empty()) {
        Pending p = std::move(queue.front());
        queue.pop_front();
        NearPoint node;
        node.id = static_cast<int>(tree.nodes.size());
        node.parent = p.parent;
        node.point = p.point;
        node.branches = p.branches;
        node.exceptional = (p.ex ? 1 : 0) + (p.ey ? 1 : 0);
        for (const auto& b : p.local) node.multiplicity += b.multiplicity();
        node.satellite = node.exceptional == 2;
        node.free = p.parent >= 0 && !node.satellite;
        for (int i : p.branches) {
            auto& path = tree.paths[static_cast<std::size_t>(i)];
            path.push_back(node.id);
            if (static_cast<int>(path.size()) > bound)
                throw StabilizationError("resolution path of branch " + std::to_string(i) +
                                         " exceeds the bound " + std::to_string(bound));
        }

        // Normal crossings: smooth branches and exceptional curves, at most two, transverse.
        bool nc = node.multiplicity + node.exceptional <= 2;
        if (nc) {
            std::vector<std::optional<Rational>> dirs;
            if (p.ex) dirs.push_back(std::nullopt);
            if (p.ey) dirs.push_back(Rational(0));
            for (const auto& b : p.local) {
                if (b.multiplicity() != 1) nc = false;
                else dirs.push_back(tangent_slope(b));
            }
            for (std::size_t i = 0; nc && i < dirs.size(); ++i)
                for (std::size_t j = i + 1; nc && j < dirs.size(); ++j)
                    if (dirs[i] == dirs[j]) nc = false;
        }
        node.leaf = nc;
        if (!nc) {
            std::vector<Pending> children;
            for (std::size_t i = 0; i < p.local.size(); ++i) {
                const BlowupStep s = blowup_branch(p.local[i]);
                const std::string key = s.centre ? to_string(*s.centre) : "inf";
                auto it = std::find_if(children.begin(), children.end(),
                                       [&](const Pending& c) { return c.point == key; });
                if (it == children.end()) {
                    const bool ex = s.chart == 'A' ? true : p.ex;
                    const bool ey = s.chart == 'A' ? (is_zero(*s.centre) && p.ey) : true;
                    children.push_back(Pending{node.id, key, ex, ey, {}, {}});
                    it = children.end() - 1;
                }
                it->branches.push_back(p.branches[i]);
                it->local.push_back(s.next);
            }
            for (auto& c : children) queue.push_back(std::move(c));
        }
        node.local = std::move(p.local);
        tree.nodes.push_back(std::move(node));
    }
    return tree;
}

std::vector<int> multiplicity_sequence(const ResolutionTree& tree, int branch) {
    std::vector<int> seq;
    for (int id : tree.paths[static_cast<std::size_t>(branch)]) {
        const NearPoint& n = tree.nodes[static_cast<std::size_t>(id)];
        const auto pos = std::find(n.branches.begin(), n.branches.end(), branch) - n.branches.begin();
        const int m = n.local[static_cast<std::size_t>(pos)].multiplicity();
        seq.push_back(m);
        if (m == 1) break;
    }
    return seq;
}

std::vector<int> multiplicity_sequence(const Branch& b) {
    return multiplicity_sequence(resolution_tree(MultiGerm(b.ambient(), {b})), 0);
}

int wall_modality(const ResolutionTree& tree) {
    // A smooth point is not a singularity; the formula would give 1.
    if (tree.nodes.front().multiplicity == 1) return 0;
    int sum = 0;
    for (const auto& n : tree.nodes) sum += (n.multiplicity - 1) * (n.multiplicity - 2) / 2;
    return sum - tree.branch_count() - tree.satellite_count() + 2;
}

bool bpv_simple(const ResolutionTree& tree) {
    return std::all_of(tree.nodes.begin(), tree.nodes.end(),
                       [](const NearPoint& n) { return n.total_multiplicity() <= 3; });
}

std::optional<std::string> ade_recognize(const ResolutionTree& tree) {
    const int r = tree.branch_count();
    const int m = tree.nodes.front().multiplicity;
    std::vector<std::vector<int>> seq;
    for (int i = 0; i < r; ++i) seq.push_back(multiplicity_sequence(tree, i));
    auto shared = [&](int i, int j) {
        return shared_prefix(tree.paths[static_cast<std::size_t>(i)], tree.paths[static_cast<std::size_t>(j)]);
    };
    // Sequence 2,...,2,1 with j twos; -1 otherwise.
    auto double_points = [](const std::vector<int>& s) {
        if (s.back() != 1) return -1;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] != 2) return -1;
        return static_cast<int>(s.size()) - 1;
    };
    if (m == 1) return "A0";
    if (m == 2) {
        if (r == 1) {
            const int j = double_points(seq[0]);
            if (j >= 1) return "A" + std::to_string(2 * j);
            return std::nullopt;
        }
        return "A" + std::to_string(2 * shared(0, 1) - 1);
    }
    if (m != 3) return std::nullopt;
    if (r == 1) {
        if (seq[0] == std::vector<int>{3, 1}) return "E6";
        if (seq[0] == std::vector<int>{3, 2, 1}) return "E8";
        return std::nullopt;
    }
    if (r == 2) {
        const int cusp = seq[0].front() == 2 ? 0 : 1;
        const int j = double_points(seq[static_cast<std::size_t>(cusp)]);
        if (j < 1) return std::nullopt;
        const int common = shared(0, 1);
        if (common == 1) return "D" + std::to_string(2 * j + 3);
        if (common == 2 && j == 1) return "E7";
        return std::nullopt;
    }
    if (r == 3) {
        std::vector<int> s{shared(0, 1), shared(0, 2), shared(1, 2)};
        std::sort(s.begin(), s.end());
        if (s[0] == 1 && s[1] == 1) return "D" + std::to_string(2 * s[2] + 2);
        return std::nullopt;
    }
    return std::nullopt;
}

std::string export_tree(const ResolutionTree& tree) {
    std::ostringstream os;
    for (const auto& n : tree.nodes) {
        os << "node id=" << n.id << " parent=" << (n.parent < 0 ? std::string("-") : std::to_string(n.parent))
           << " point=" << n.point << " m=" << n.multiplicity << " exceptional=" << n.exceptional
           << " total=" << n.total_multiplicity() << " satellite=" << (n.satellite ? "yes" : "no")
           << " free=" << (n.free ? "yes" : "no") << " leaf=" << (n.leaf ? "yes" : "no")
           << " branches=";
        for (std::size_t i = 0; i < n.branches.size(); ++i) os << (i ? "," : "") << n.branches[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace curvesing
