#include "bwalk/oracle.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>

namespace bwalk::oracle {

VSets all_pairs_neighbor_sets(const Sample& sample) {
    const size_t sz = sample.size();
    if (sz < 2) throw std::invalid_argument("all-pairs scan needs at least two strings");
    VSets v(sz);
    const auto& fit = sample.fitnesses();
    const size_t wps = sample.words_per_string();
    for (size_t i = 0; i + 1 < sz; ++i) {
        const uint64_t* ri = sample.row(i);
        const double fi = fit[i];
        for (size_t j = i + 1; j < sz; ++j) {
            const double fj = fit[j];
            if (fi == fj) continue;
            size_t d = std::popcount(ri[0] ^ sample.row(j)[0]);
            for (size_t w = 1; w < wps; ++w) d += std::popcount(ri[w] ^ sample.row(j)[w]);
            if (fi < fj) {
                v.offer(i, static_cast<uint32_t>(j), static_cast<uint32_t>(d));
            } else {
                v.offer(j, static_cast<uint32_t>(i), static_cast<uint32_t>(d));
            }
        }
    }
    v.normalize();
    return v;
}

TimedVSets all_pairs_timing(const Sample& sample) {
    TimedVSets out;
    const auto t0 = std::chrono::steady_clock::now();
    out.vsets = all_pairs_neighbor_sets(sample);
    const auto t1 = std::chrono::steady_clock::now();
    out.seconds = std::chrono::duration<double>(t1 - t0).count();
    out.pair_count = sample.size() * (sample.size() - 1) / 2;
    return out;
}

} // namespace bwalk::oracle
