#pragma once

#include <cstdint>
#include <vector>

#include "bwalk/bitstring.hpp"
#include "bwalk/fitness.hpp"
#include "bwalk/rng.hpp"
#include "bwalk/sample.hpp"

namespace bwalk::sampler {

/// Every string of length n in lexicographic order, evaluated. Refuses
/// lengths whose enumeration would exceed max_points.
Sample enum_sample(const FitnessFunction& f, size_t max_points = size_t{1} << 26);

/// `count` distinct uniform strings of length f.length(), evaluated.
Sample rand_sample(const FitnessFunction& f, size_t count, Rng& rng);

struct WlConfig {
    double bin_width = 0.1;    ///< histogram bin width over the declared fitness range
    double flatness = 0.90;    ///< every bin's count must reach this fraction of the mean
    double ln_f_init = 1.0;    ///< ln of the initial modification factor (f = e)
    double ln_f_epsilon = 1e-9;///< stop once ln f falls below this
    size_t max_sample = 0;     ///< stop once this many distinct strings are visited (0 = no cap)
    size_t max_evaluations = 0;///< hard cap on fitness calls (0 = no cap)
    size_t check_interval = 1000; ///< proposals between flatness checks
    /// Bins counted by the flatness test; empty = all. Unreachable bins
    /// otherwise block flatness forever, leaving max_sample/max_evaluations
    /// as the only exits.
    std::vector<uint8_t> bin_mask;
};

struct WlRun {
    Sample sample{0, Origin::Awl}; ///< distinct visited strings in first-visit order
    size_t evaluations = 0;    ///< fitness calls: 1 for the start + 1 per proposal
    double final_ln_f = 0.0;
    uint64_t seed = 0;
};

/// Wang-Landau random walk with single-bit-flip proposals over the energy
/// histogram of f. Flat-histogram stages sharpen the density-of-states
/// estimate; the by-product is a sample that spreads over fitness levels
/// far more evenly than uniform draws.
WlRun wang_landau(const FitnessFunction& f, const WlConfig& cfg, Rng& rng);

} // namespace bwalk::sampler
