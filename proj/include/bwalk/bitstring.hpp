#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwalk/rng.hpp"

namespace bwalk {

/// Fixed-length binary string. Position 0 is the leftmost character of the
/// textual form; internally bit i lives in word i/64 at bit i%64.
class BitString {
  public:
    BitString() = default;

    explicit BitString(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitString from_string(const std::string& text) {
        BitString s(text.size());
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                s.set(i, true);
            } else if (text[i] != '0') {
                throw std::invalid_argument("bit string may contain only '0' and '1'");
            }
        }
        return s;
    }

    /// The v-th string of length n in lexicographic order of the textual
    /// form, i.e. character i is bit (n-1-i) of v.
    static BitString from_value(uint64_t v, size_t n) {
        if (n > 64) throw std::invalid_argument("from_value supports at most 64 positions");
        BitString s(n);
        for (size_t i = 0; i < n; ++i) {
            s.set(i, (v >> (n - 1 - i)) & 1u);
        }
        return s;
    }

    static BitString random(size_t n, Rng& rng) {
        BitString s(n);
        for (auto& w : s.words_) w = rng.next_u64();
        s.mask_tail();
        return s;
    }

    size_t size() const { return n_; }

    bool bit(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    void set(size_t i, bool v) {
        const uint64_t m = uint64_t{1} << (i % 64);
        if (v) {
            words_[i / 64] |= m;
        } else {
            words_[i / 64] &= ~m;
        }
    }

    void flip(size_t i) { words_[i / 64] ^= uint64_t{1} << (i % 64); }

    BitString flipped(size_t i) const {
        BitString s = *this;
        s.flip(i);
        return s;
    }

    /// Value under the from_value convention. Only defined for n <= 64.
    uint64_t value() const {
        if (n_ > 64) throw std::invalid_argument("value() supports at most 64 positions");
        uint64_t v = 0;
        for (size_t i = 0; i < n_; ++i) {
            v = (v << 1) | static_cast<uint64_t>(bit(i));
        }
        return v;
    }

    std::string to_string() const {
        std::string text(n_, '0');
        for (size_t i = 0; i < n_; ++i) {
            if (bit(i)) text[i] = '1';
        }
        return text;
    }

    const std::vector<uint64_t>& words() const { return words_; }

    bool operator==(const BitString& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const BitString& o) const { return !(*this == o); }

  private:
    void mask_tail() {
        const size_t used = n_ % 64;
        if (used != 0 && !words_.empty()) {
            words_.back() &= (uint64_t{1} << used) - 1;
        }
    }

    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

inline size_t hamming(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming distance requires equal lengths");
    }
    size_t d = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (size_t i = 0; i < wa.size(); ++i) d += std::popcount(wa[i] ^ wb[i]);
    return d;
}

struct BitStringHash {
    size_t operator()(const BitString& s) const {
        uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
        for (uint64_t w : s.words()) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace bwalk
