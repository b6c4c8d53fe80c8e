#pragma once

#include "curvesing/germ.hpp"

#include <cstdint>
#include <vector>

namespace curvesing {

/// Reproducible random plane multi-germs with multiplicity ≤ max_mult and
/// δ ≤ max_delta, used to cross-check the resolution against A-D-E recognition.
std::vector<MultiGerm> random_plane_corpus(std::size_t count, std::uint32_t seed, int max_mult = 4,
                                           int max_delta = 8);

}  // namespace curvesing
