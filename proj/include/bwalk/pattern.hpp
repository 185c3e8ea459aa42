#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bwalk/rng.hpp"
#include "bwalk/sample.hpp"

namespace bwalk {

/// Assignment of each string position to one of m windows. Window w of a
/// string is the set of positions assigned w; removing them leaves the
/// exclusion subsequence the clustering keys on.
class Pattern {
  public:
    /// One digit per position, e.g. "0110" puts positions 1 and 2 in
    /// window 1 and positions 0 and 3 in window 0.
    static Pattern from_digits(const std::string& digits);

    /// Contiguous equal blocks: m windows over n positions, window 0
    /// leftmost. m must divide n.
    static Pattern blocks(size_t n, size_t m);

    Pattern(std::vector<uint32_t> window_of, size_t num_windows);

    size_t length() const { return window_of_.size(); }
    size_t num_windows() const { return num_windows_; }
    uint32_t window_of(size_t pos) const { return window_of_[pos]; }

    /// Positions not assigned to window w, in position order.
    const std::vector<uint32_t>& kept_positions(uint32_t w) const { return kept_[w]; }

    std::string to_digits() const;

  private:
    std::vector<uint32_t> window_of_;
    size_t num_windows_;
    std::vector<std::vector<uint32_t>> kept_;
};

/// Proportion of 1s at each string position.
std::vector<double> identity_level(const Sample& sample);

/// Pattern that keeps positions of similar identity level together:
/// positions are ranked by descending level (ties by lower position), cut
/// into m blocks of n/m, and the block of highest levels gets the highest
/// window id. m must divide n.
Pattern good_pattern(const Sample& sample, size_t m);

/// Uniformly random balanced assignment: exactly n/m positions per
/// window. m must divide n.
Pattern random_pattern(size_t n, size_t m, Rng& rng);

} // namespace bwalk
