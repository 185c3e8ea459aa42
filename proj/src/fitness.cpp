#include "bwalk/fitness.hpp"

#include <stdexcept>

#include "bwalk/errors.hpp"

namespace bwalk {

namespace {

// Tables hold 2^(k+1) doubles per position; refuse configurations whose
// tables alone would dwarf memory.
constexpr size_t kMaxTableBits = 26;

} // namespace

NkLandscape::NkLandscape(size_t n, size_t k, uint64_t seed)
    : n_(n), k_(k), seed_(seed), has_seed_(true) {
    if (n < 1) throw std::invalid_argument("landscape needs at least one position");
    if (k >= n) throw std::invalid_argument("epistasis degree must satisfy k < n");
    if (k + 1 > kMaxTableBits) {
        throw ResourceError("contribution tables of 2^" + std::to_string(k + 1) +
                            " entries per position exceed the memory budget");
    }
    Rng rng(seed);
    neighbors_.resize(n);
    tables_.resize(n);
    const size_t table_size = size_t{1} << (k + 1);
    for (size_t i = 0; i < n; ++i) {
        auto& nb = neighbors_[i];
        nb.reserve(k);
        while (nb.size() < k) {
            auto cand = static_cast<uint32_t>(rng.next_below(n));
            if (cand == i) continue;
            bool seen = false;
            for (uint32_t c : nb) {
                if (c == cand) { seen = true; break; }
            }
            if (!seen) nb.push_back(cand);
        }
        auto& tb = tables_[i];
        tb.resize(table_size);
        for (auto& v : tb) v = rng.next_double();
    }
}

NkLandscape::NkLandscape(size_t n, size_t k,
                         std::vector<std::vector<uint32_t>> neighbors,
                         std::vector<std::vector<double>> tables)
    : n_(n), k_(k), neighbors_(std::move(neighbors)), tables_(std::move(tables)) {
    if (k >= n) throw std::invalid_argument("epistasis degree must satisfy k < n");
    if (neighbors_.size() != n || tables_.size() != n) {
        throw std::invalid_argument("need one neighbor list and one table per position");
    }
    const size_t table_size = size_t{1} << (k + 1);
    for (size_t i = 0; i < n; ++i) {
        if (neighbors_[i].size() != k) {
            throw std::invalid_argument("every neighbor list must have k entries");
        }
        for (uint32_t c : neighbors_[i]) {
            if (c >= n || c == i) {
                throw std::invalid_argument("neighbors must be other positions of the string");
            }
        }
        if (tables_[i].size() != table_size) {
            throw std::invalid_argument("every table must have 2^(k+1) entries");
        }
    }
}

double NkLandscape::evaluate(const BitString& s) const {
    if (s.size() != n_) throw std::invalid_argument("string length does not match landscape");
    double total = 0.0;
    for (size_t i = 0; i < n_; ++i) {
        size_t idx = s.bit(i) ? 1 : 0;
        const auto& nb = neighbors_[i];
        for (size_t j = 0; j < nb.size(); ++j) {
            idx |= static_cast<size_t>(s.bit(nb[j])) << (j + 1);
        }
        total += tables_[i][idx];
    }
    return total / static_cast<double>(n_);
}

NkLandscape nk_generate(size_t n, size_t k, uint64_t seed) {
    return NkLandscape(n, k, seed);
}

} // namespace bwalk
