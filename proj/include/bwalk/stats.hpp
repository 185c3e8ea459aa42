#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bwalk/walks.hpp"

namespace bwalk::stats {

/// Shape statistics of one walk's step-length sequence.
struct StepStats {
    size_t wlen = 0;       ///< number of steps
    size_t wdist = 0;      ///< sum of step lengths
    size_t cwlen = 0;      ///< steps after collapsing adjacent equal lengths
    size_t cwdist = 0;     ///< their sum
    double cr1 = 0.0;      ///< cwlen / wlen
    double cr2 = 0.0;      ///< cwdist / wdist
    size_t adaptlen = 0;   ///< longest run of equal step lengths
    size_t variation = 0;  ///< number of distinct step lengths
    size_t range = 0;      ///< max - min step length
};

/// Collapse adjacent equal values to one representative.
std::vector<uint32_t> compress(const std::vector<uint32_t>& steps);

StepStats step_stats(const std::vector<uint32_t>& steps);

/// Mean and spread of one statistic across instances: per-instance walk
/// means first, then the mean of those, with a normal-approximation 95%
/// confidence half-width over the instances.
struct AggregateStats {
    double cr1 = 0.0, cr1_ci = 0.0;
    double cr2 = 0.0, cr2_ci = 0.0;
    double avg_step = 0.0, avg_step_ci = 0.0;
    double adaptlen = 0.0, adaptlen_ci = 0.0;
    double variation = 0.0, variation_ci = 0.0;
    double range = 0.0, range_ci = 0.0;
    double wlen = 0.0, wlen_ci = 0.0;
    size_t instances = 0;
};

/// One instance's walks, already reduced to per-walk statistics.
struct InstanceStats {
    std::vector<StepStats> walks;
};

AggregateStats aggregate(const std::vector<InstanceStats>& instances);

/// Rounded landscape-difficulty fingerprint: C from cr1 (scaled by 10),
/// S from the mean step length, V from variation, R from range. Rounds
/// half away from zero.
struct Discretized {
    int64_t c = 0;
    int64_t s = 0;
    int64_t v = 0;
    int64_t r = 0;
};

Discretized discretize(double cr1, double avg_step, double variation, double range);
Discretized discretize(const AggregateStats& agg);

/// Unary rendering of a fingerprint: per component a delimiter letter, a
/// run of '1's of the component's value, then '0' padding to that
/// component's field width.
struct CapabilityDescription {
    std::string text;
    size_t gap_count = 0; ///< total '0's in text
};

/// Render each fingerprint against the component-wise maxima of the whole
/// set, so equal-length strings can be compared position by position.
/// `letters` holds the four delimiter characters in C, S, V, R order.
std::vector<CapabilityDescription> describe(const std::vector<Discretized>& fingerprints,
                                            const std::string& letters = "CSVR");

} // namespace bwalk::stats
