#include "bwalk/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bwalk {

Pattern::Pattern(std::vector<uint32_t> window_of, size_t num_windows)
    : window_of_(std::move(window_of)), num_windows_(num_windows) {
    if (window_of_.empty()) throw std::invalid_argument("pattern must cover at least one position");
    if (num_windows_ < 1) throw std::invalid_argument("pattern needs at least one window");
    std::vector<size_t> count(num_windows_, 0);
    for (uint32_t w : window_of_) {
        if (w >= num_windows_) throw std::invalid_argument("window id out of range");
        ++count[w];
    }
    for (size_t w = 0; w < num_windows_; ++w) {
        if (count[w] == 0) throw std::invalid_argument("every window must own a position");
    }
    kept_.resize(num_windows_);
    for (size_t w = 0; w < num_windows_; ++w) {
        kept_[w].reserve(window_of_.size() - count[w]);
        for (uint32_t pos = 0; pos < window_of_.size(); ++pos) {
            if (window_of_[pos] != w) kept_[w].push_back(pos);
        }
    }
}

Pattern Pattern::from_digits(const std::string& digits) {
    std::vector<uint32_t> assign;
    assign.reserve(digits.size());
    uint32_t max_id = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("pattern digits must be 0-9");
        auto id = static_cast<uint32_t>(c - '0');
        assign.push_back(id);
        max_id = std::max(max_id, id);
    }
    return Pattern(std::move(assign), max_id + 1);
}

Pattern Pattern::blocks(size_t n, size_t m) {
    if (m == 0 || n % m != 0) throw std::invalid_argument("window count must divide the length");
    std::vector<uint32_t> assign(n);
    const size_t w = n / m;
    for (size_t pos = 0; pos < n; ++pos) assign[pos] = static_cast<uint32_t>(pos / w);
    return Pattern(std::move(assign), m);
}

std::string Pattern::to_digits() const {
    std::string text;
    text.reserve(window_of_.size());
    for (uint32_t w : window_of_) {
        if (w > 9) throw std::invalid_argument("digit form supports at most 10 windows");
        text.push_back(static_cast<char>('0' + w));
    }
    return text;
}

std::vector<double> identity_level(const Sample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("identity level of an empty sample");
    std::vector<double> level(sample.length());
    for (size_t pos = 0; pos < sample.length(); ++pos) {
        size_t ones = 0;
        for (size_t sid = 0; sid < sample.size(); ++sid) {
            ones += sample.bit(sid, pos);
        }
        level[pos] = static_cast<double>(ones) / static_cast<double>(sample.size());
    }
    return level;
}

Pattern good_pattern(const Sample& sample, size_t m) {
    const size_t n = sample.length();
    if (m == 0 || n % m != 0) throw std::invalid_argument("window count must divide the length");
    const auto level = identity_level(sample);
    std::vector<uint32_t> ranked(n);
    std::iota(ranked.begin(), ranked.end(), 0u);
    std::stable_sort(ranked.begin(), ranked.end(), [&](uint32_t a, uint32_t b) {
        return level[a] > level[b];
    });
    // Highest-identity block gets the highest window id, so window 0 holds
    // the most variable positions.
    std::vector<uint32_t> assign(n);
    const size_t w = n / m;
    for (size_t r = 0; r < n; ++r) {
        assign[ranked[r]] = static_cast<uint32_t>(m - 1 - r / w);
    }
    return Pattern(std::move(assign), m);
}

Pattern random_pattern(size_t n, size_t m, Rng& rng) {
    if (m == 0 || n % m != 0) throw std::invalid_argument("window count must divide the length");
    std::vector<uint32_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0u);
    for (size_t i = n; i > 1; --i) {
        std::swap(positions[i - 1], positions[rng.next_below(i)]);
    }
    std::vector<uint32_t> assign(n);
    const size_t w = n / m;
    for (size_t r = 0; r < n; ++r) {
        assign[positions[r]] = static_cast<uint32_t>(r / w);
    }
    return Pattern(std::move(assign), m);
}

} // namespace bwalk
