#pragma once

#include <cstdint>
#include <vector>

namespace bwalk {

/// Per-string nearest strictly-fitter neighbor sets. For each sid,
/// members[sid] lists the sids of the fitter strings found at the smallest
/// distance seen for sid, and min_hd[sid] is that distance. A string with
/// no fitter partner (notably the fittest) has an empty member list and
/// min_hd 0.
struct VSets {
    std::vector<uint32_t> min_hd;
    std::vector<std::vector<uint32_t>> members;

    explicit VSets(size_t size = 0) : min_hd(size, 0), members(size) {}

    size_t size() const { return members.size(); }

    bool has(size_t sid) const { return !members[sid].empty(); }

    /// Offer a fitter partner at distance hd; keeps only the minimum
    /// distance, accumulating members on ties.
    void offer(size_t sid, uint32_t partner, uint32_t hd) {
        if (members[sid].empty() || hd < min_hd[sid]) {
            min_hd[sid] = hd;
            members[sid].assign(1, partner);
        } else if (hd == min_hd[sid]) {
            members[sid].push_back(partner);
        }
    }

    /// Sort member lists and drop duplicates; canonical form for
    /// comparison and serialization.
    void normalize();

    bool operator==(const VSets& o) const {
        return min_hd == o.min_hd && members == o.members;
    }
};

/// Merge per-run results: for each sid the run with the smaller distance
/// wins; equal distances union the member lists.
VSets combine(const std::vector<VSets>& runs);

/// Mean of min_hd over the sids that have a non-empty V set.
double mean_b_min_hd(const VSets& v);

} // namespace bwalk
