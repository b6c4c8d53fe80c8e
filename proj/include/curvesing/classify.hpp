#pragma once

#include "curvesing/atlas.hpp"
#include "curvesing/germ.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvesing {

enum class Verdict { Simple, NotSimple, Unknown };

std::string to_string(Verdict v);

/// A reduction rule that certifies non-simplicity.
struct RuleHit {
    std::string rule;
    std::string citation;
    /// Confining curve the germ deforms to, when the rule names one.
    std::optional<std::string> target;
    /// Id of a shipped deformation family realising the rule, if any.
    std::optional<std::string> witness;
};

struct ClassificationResult {
    Verdict verdict = Verdict::Unknown;
    /// Simple: the matched type. NotSimple: the matched non-simple entry, if any.
    std::optional<Instance> match;
    std::string label;
    std::optional<RuleHit> rule;
    /// Unknown: the competing labels, if the signature matched several.
    std::vector<std::string> candidates;
    std::string reason;
    Signature signature;
};

/// The reduction rules in order; the first one that applies. Single-branch
/// rules are also applied to every branch of a multi-germ.
std::optional<RuleHit> nonsimple_rules(const MultiGerm& g, const JetOptions& opts = {});

/// Signature match against the catalogue, then the plane ADE test, then the
/// reduction rules. Stabilization failures give Unknown.
ClassificationResult recognize(const MultiGerm& g, const CatalogueBounds& bounds = {},
                               const JetOptions& opts = {});

/// Signature of a catalogue instance, memoised per process.
const Signature& catalogue_signature(const Instance& inst);

/// Structured text record: verdict, label, rule, citation, witness.
std::string classification_record(const ClassificationResult& r);

}  // namespace curvesing
