#include "bwalk/vsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwalk {

void VSets::normalize() {
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
}

VSets combine(const std::vector<VSets>& runs) {
    if (runs.empty()) throw std::invalid_argument("combine needs at least one run");
    const size_t size = runs.front().size();
    for (const auto& r : runs) {
        if (r.size() != size) throw std::invalid_argument("combine requires one sid universe");
    }
    VSets out(size);
    for (const auto& r : runs) {
        for (size_t sid = 0; sid < size; ++sid) {
            if (r.members[sid].empty()) continue;
            if (out.members[sid].empty() || r.min_hd[sid] < out.min_hd[sid]) {
                out.min_hd[sid] = r.min_hd[sid];
                out.members[sid] = r.members[sid];
            } else if (r.min_hd[sid] == out.min_hd[sid]) {
                out.members[sid].insert(out.members[sid].end(), r.members[sid].begin(),
                                        r.members[sid].end());
            }
        }
    }
    out.normalize();
    return out;
}

double mean_b_min_hd(const VSets& v) {
    size_t total = 0;
    size_t count = 0;
    for (size_t sid = 0; sid < v.size(); ++sid) {
        if (!v.members[sid].empty()) {
            total += v.min_hd[sid];
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("no sid has a fitter neighbor");
    return static_cast<double>(total) / static_cast<double>(count);
}

} // namespace bwalk
