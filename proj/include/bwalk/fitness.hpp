#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bwalk/bitstring.hpp"
#include "bwalk/rng.hpp"

namespace bwalk {

/// A fitness function over binary strings of a fixed length. Higher is
/// fitter everywhere in this library. The declared range [range_min,
/// range_max) bounds every value and defines the energy-histogram extent
/// for samplers.
class FitnessFunction {
  public:
    virtual ~FitnessFunction() = default;

    virtual size_t length() const = 0;
    virtual double evaluate(const BitString& s) const = 0;
    virtual double range_min() const = 0;
    virtual double range_max() const = 0;
};

/// NK landscape: each position contributes a value that depends on its own
/// state and the states of k other positions; fitness is the mean of the n
/// contributions. The neighborhoods and contribution tables are drawn once
/// from the seed, so an instance is fully determined by (n, k, seed).
class NkLandscape : public FitnessFunction {
  public:
    NkLandscape(size_t n, size_t k, uint64_t seed);

    /// Explicit instance; neighbors[i] lists the k interacting positions of
    /// position i, tables[i] has 2^(k+1) entries.
    NkLandscape(size_t n, size_t k,
                std::vector<std::vector<uint32_t>> neighbors,
                std::vector<std::vector<double>> tables);

    size_t length() const override { return n_; }
    size_t k() const { return k_; }
    uint64_t seed() const { return seed_; }
    bool has_seed() const { return has_seed_; }

    double evaluate(const BitString& s) const override;
    double range_min() const override { return 0.0; }
    double range_max() const override { return 1.0; }

    const std::vector<std::vector<uint32_t>>& neighbors() const { return neighbors_; }
    const std::vector<std::vector<double>>& tables() const { return tables_; }

  private:
    size_t n_;
    size_t k_;
    uint64_t seed_ = 0;
    bool has_seed_ = false;
    std::vector<std::vector<uint32_t>> neighbors_;
    std::vector<std::vector<double>> tables_;
};

NkLandscape nk_generate(size_t n, size_t k, uint64_t seed);

/// Fitness looked up from an explicit table; strings not in the table get
/// `fallback`. Useful for small worked examples and tests.
class TableFitness : public FitnessFunction {
  public:
    TableFitness(size_t n, std::unordered_map<BitString, double, BitStringHash> table,
                 double fallback = -1.0, double lo = -1.0, double hi = 64.0)
        : n_(n), table_(std::move(table)), fallback_(fallback), lo_(lo), hi_(hi) {}

    size_t length() const override { return n_; }

    double evaluate(const BitString& s) const override {
        auto it = table_.find(s);
        return it == table_.end() ? fallback_ : it->second;
    }

    double range_min() const override { return lo_; }
    double range_max() const override { return hi_; }

  private:
    size_t n_;
    std::unordered_map<BitString, double, BitStringHash> table_;
    double fallback_;
    double lo_;
    double hi_;
};

/// Constant fitness; every string maps to the same value. The default
/// declared range spans one 0.1-wide histogram bin, which collapses any
/// energy histogram to a single bin.
class ConstantFitness : public FitnessFunction {
  public:
    ConstantFitness(size_t n, double value, double lo, double hi)
        : n_(n), value_(value), lo_(lo), hi_(hi) {}

    ConstantFitness(size_t n, double value)
        : ConstantFitness(n, value, value, value + 0.1) {}

    size_t length() const override { return n_; }
    double evaluate(const BitString&) const override { return value_; }
    double value() const { return value_; }
    double range_min() const override { return lo_; }
    double range_max() const override { return hi_; }

  private:
    size_t n_;
    double value_;
    double lo_;
    double hi_;
};

} // namespace bwalk
