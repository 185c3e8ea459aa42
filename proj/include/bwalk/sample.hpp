#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwalk/bitstring.hpp"
#include "bwalk/fitness.hpp"

namespace bwalk {

/// How a sample was produced.
enum class Origin { Enum, Rand, Awl, External };

/// A set of distinct evaluated strings of a common length. Row i keeps the
/// string's bits in a flat word matrix plus its fitness; row order is the
/// sid order every downstream structure refers to.
class Sample {
  public:
    explicit Sample(size_t n, Origin origin = Origin::External)
        : n_(n), wps_((n + 63) / 64), origin_(origin) {}

    size_t length() const { return n_; }
    Origin origin() const { return origin_; }
    size_t size() const { return fitness_.size(); }
    size_t words_per_string() const { return wps_; }

    void add(const BitString& s, double fitness) {
        if (s.size() != n_) throw std::invalid_argument("sample strings must share a length");
        words_.insert(words_.end(), s.words().begin(), s.words().end());
        fitness_.push_back(fitness);
    }

    double fitness(size_t sid) const { return fitness_[sid]; }
    const std::vector<double>& fitnesses() const { return fitness_; }

    const uint64_t* row(size_t sid) const { return words_.data() + sid * wps_; }

    bool bit(size_t sid, size_t pos) const {
        return (row(sid)[pos / 64] >> (pos % 64)) & 1u;
    }

    BitString get(size_t sid) const {
        BitString s(n_);
        for (size_t i = 0; i < n_; ++i) s.set(i, bit(sid, i));
        return s;
    }

    size_t hamming(size_t a, size_t b) const {
        const uint64_t* ra = row(a);
        const uint64_t* rb = row(b);
        size_t d = 0;
        for (size_t w = 0; w < wps_; ++w) d += std::popcount(ra[w] ^ rb[w]);
        return d;
    }

    /// Index of the fittest string (ties broken by lower sid).
    size_t fittest() const {
        if (fitness_.empty()) throw std::invalid_argument("empty sample has no fittest element");
        size_t best = 0;
        for (size_t i = 1; i < fitness_.size(); ++i) {
            if (fitness_[i] > fitness_[best]) best = i;
        }
        return best;
    }

  private:
    size_t n_;
    size_t wps_;
    Origin origin_;
    std::vector<uint64_t> words_;
    std::vector<double> fitness_;
};

/// Evaluate every string under f and collect them into a Sample in the
/// given order.
Sample evaluate(const std::vector<BitString>& strings, const FitnessFunction& f);

/// Reorder ascending by fitness (ties by original position). Returns the
/// permuted sample; perm_out (if non-null) receives old sid per new row.
Sample sort_by_fitness(const Sample& sample, std::vector<uint32_t>* perm_out = nullptr);

} // namespace bwalk
