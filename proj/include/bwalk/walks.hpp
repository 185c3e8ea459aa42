#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bwalk/fitness.hpp"
#include "bwalk/rng.hpp"
#include "bwalk/sample.hpp"
#include "bwalk/vsets.hpp"

namespace bwalk::walks {

/// An adaptive walk through the sample: strictly fitter at every step,
/// each move to a member of the current string's V set. steps[i] is the
/// recorded distance of the move out of nodes[i].
struct Walk {
    std::vector<uint32_t> nodes;
    std::vector<uint32_t> steps;

    size_t length() const { return steps.size(); }
};

/// Single walk from `start`, choosing uniformly among V-set members at
/// each node until a node with an empty V set is reached. Starting at a
/// fittest point (empty V set) is an error.
Walk build_walk(const VSets& v, uint32_t start, Rng& rng);

/// One walk per sid that has a non-empty V set, in sid order. Each walk
/// draws from its own derived stream so the set is order-independent.
std::vector<Walk> all_walks(const VSets& v, const Rng& rng);

/// Points whose outgoing step dominates their incoming steps under the
/// active rule. Arrays are aligned with `sids`; in_steps holds each
/// point's full incoming step multiset, ascending.
struct PlopReport {
    std::vector<uint32_t> sids;
    std::vector<uint32_t> out_steps;
    std::vector<std::vector<uint32_t>> in_steps;
};

/// Decide whether out/in step lengths make a point a local peak. The
/// default accepts when the outgoing step exceeds the shortest incoming
/// step; strict_plop_rule() demands it exceed the longest.
using PlopRule = std::function<bool(uint32_t out_step, const std::vector<uint32_t>& in_steps)>;

PlopRule default_plop_rule();
PlopRule strict_plop_rule();

/// Scan all sids: s qualifies when it has an outgoing step, at least one
/// incoming step, and the rule accepts the step lengths.
PlopReport detect_plops(const VSets& v, const PlopRule& rule = default_plop_rule());

/// Fraction of the N single-bit neighbors of s that are no fitter than s.
/// 1.0 means s is a strict-or-equal local optimum of the full landscape.
double plef(const FitnessFunction& f, const BitString& s);

/// Jaccard overlap |a & b| / |a | b| of two sid sets. Both empty is an
/// error.
double overlap(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

struct PlefTestResult {
    std::vector<uint32_t> full_optima; ///< sids with plef == 1.0
    std::vector<uint32_t> plops;       ///< sids flagged by detect_plops
    double jaccard = 0.0;
};

/// Compare the walk-level peak signal against ground truth: compute plef
/// for every sample string and report the overlap between exact optima and
/// detected peaks.
PlefTestResult plef_test(const FitnessFunction& f, const Sample& sample, const VSets& v,
                         const PlopRule& rule = default_plop_rule());

} // namespace bwalk::walks
