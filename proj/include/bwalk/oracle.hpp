#pragma once

#include <cstdint>

#include "bwalk/sample.hpp"
#include "bwalk/vsets.hpp"

namespace bwalk::oracle {

/// Exact nearest strictly-fitter neighbor sets by comparing every pair of
/// sample strings. Quadratic in the sample size; the reference the
/// clustering approximation is judged against.
VSets all_pairs_neighbor_sets(const Sample& sample);

struct TimedVSets {
    VSets vsets;
    double seconds = 0.0;
    size_t pair_count = 0; ///< C(|S|, 2)
};

/// all_pairs_neighbor_sets with a wall-clock measurement around the pair
/// loop only.
TimedVSets all_pairs_timing(const Sample& sample);

} // namespace bwalk::oracle
