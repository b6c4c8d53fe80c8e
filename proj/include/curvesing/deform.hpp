#pragma once

#include "curvesing/atlas.hpp"
#include "curvesing/germ.hpp"
#include "curvesing/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvesing {

/// p(φ) ≡ 0 mod g^k on every branch.
struct Congruence {
    MPoly form;
    STPoly modulus;
    int power = 1;
};

/// One-parameter family of parametrisations: each branch is a list of
/// polynomials in t with coefficients in Q[s].
struct DeformationFamily {
    std::string id;
    int ambient = 0;
    std::vector<std::vector<STPoly>> branches;
    /// Fiber at s = 0 and at the sample value, as atlas labels or germ notation.
    std::string source;
    std::string target;
    std::string citation;
    Rational sample_s = 1;
    /// Both-kind families are deformations of the image as well, hence δ-constant.
    ArrowKind kind = ArrowKind::Param;
    /// False when the special fiber has irrational base points; only
    /// congruence checks apply then.
    bool specializable = true;
    /// Checked by verify_family in addition to the fiber checks.
    std::vector<Congruence> congruences;
};

/// Local multi-germ at the origin of the fiber s = s0: every common rational
/// zero t0 of a branch's components contributes the branch re-expanded at t0.
MultiGerm specialize(const DeformationFamily& f, const Rational& s0);

/// True iff p evaluated on every branch of f is divisible by g^k in Q[s][t].
/// Linear forms are the usual case; any polynomial in the coordinates is accepted.
bool verify_congruence(const DeformationFamily& f, const MPoly& p, const STPoly& g, int k);

enum class SurfaceMode { Exact, ModDegree3 };

/// Substitutes the given branch into the surface equation. Exact: the result
/// vanishes identically. ModDegree3: the coefficients of t^0, t^1, t^2 vanish.
bool verify_on_surface(const DeformationFamily& f, int branch, const MPoly& surface, SurfaceMode mode);

/// (φ1, 0) and (φ2, s φ2) in C^{2n}.
DeformationFamily wedge_family(const MultiGerm& g1, const MultiGerm& g2);
/// z_1 = t^m, z_i = φ_i + s t^{m+i-1}; the branch needs a monomial component c t^m.
DeformationFamily monomialize_family(const Branch& b);
/// (p, t p, ..., t^{m-1} p) with p = Π (t - b_i s)^{m_i}, b_i = 0, 1, -1, 2, ...
DeformationFamily partition_family(int m, const std::vector<int>& parts);
/// Rank of ((x^k, y, z), (y, x, s)) at most one: A_k ∨ L to D_{k+1}, k ≥ 2.
DeformationFamily akl_to_dk_family(int k);
/// (t^2 - s^2, t (t^2 - s^2)^k): A_{2k} to A_{2k-1}.
DeformationFamily a_even_to_odd_family(int k);
/// Adds the coordinate s·extra on one branch (a stable extension).
DeformationFamily extend_family(const MultiGerm& g, int branch, const QPoly& extra);
/// (t^2(t-s)^2, t^3(t-s)^2, t^4(t-s)^3).
DeformationFamily w8star_to_t7star_family();
/// ((t^3-s)t^2, (t^3-s)^2, (t^3-s)^2 t, (t^3-s)^3).
DeformationFamily m5679_family();
/// Cusp (t^2,t^3,0,2st) and M3 branch ((t^2-c^2)^2 t, 0, (t^2-c^2)^2, (t^2-c^2)(t+2c))
/// with c = s as printed or c = s^2 for the variant on which the surface lemma holds.
DeformationFamily a2m3_family(bool printed = true);
/// Surface of the A2 ∪ M3 lemma, with the given coefficient of z s^8.
MPoly a2m3_surface(const Rational& last = 12);

/// The M3 → A3 branch of the lemma family on its own.
DeformationFamily m3_to_a3_family();

/// Every family shipped with the library; edge witnesses refer to these ids.
const std::vector<DeformationFamily>& shipped_families();
const DeformationFamily* find_family(const std::string& id);

struct FamilyReport {
    std::string id;
    bool ok = true;
    std::optional<int> source_delta;
    std::optional<int> target_delta;
    int source_branches = 0;
    int target_branches = 0;
    std::vector<std::string> failures;
};

/// Fiber checks: Signature at s = 0 against the source, at the sample value
/// against the target, δ and branch-count semicontinuity, δ-constancy for
/// both-kind families.
FamilyReport verify_family(const DeformationFamily& f);

/// Germ denoted by an atlas label or by germ notation.
MultiGerm germ_of(const std::string& label_or_notation);

/// Structured text record: id, labels, citation, branch polynomials.
std::string family_record(const DeformationFamily& f);

}  // namespace curvesing
