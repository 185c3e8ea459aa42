#include "bwalk/sample.hpp"

#include <algorithm>
#include <numeric>

namespace bwalk {

Sample evaluate(const std::vector<BitString>& strings, const FitnessFunction& f) {
    Sample out(f.length());
    for (const auto& s : strings) {
        out.add(s, f.evaluate(s));
    }
    return out;
}

Sample sort_by_fitness(const Sample& sample, std::vector<uint32_t>* perm_out) {
    std::vector<uint32_t> order(sample.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return sample.fitness(a) < sample.fitness(b);
    });
    Sample out(sample.length(), sample.origin());
    for (uint32_t sid : order) {
        out.add(sample.get(sid), sample.fitness(sid));
    }
    if (perm_out) *perm_out = std::move(order);
    return out;
}

} // namespace bwalk
