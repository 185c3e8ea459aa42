#include "bwalk/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwalk::walks {

Walk build_walk(const VSets& v, uint32_t start, Rng& rng) {
    if (start >= v.size()) throw std::invalid_argument("start sid out of range");
    if (!v.has(start)) {
        throw std::invalid_argument("walks cannot start at a point with an empty V set");
    }
    Walk walk;
    walk.nodes.push_back(start);
    uint32_t cur = start;
    while (v.has(cur)) {
        const auto& members = v.members[cur];
        walk.steps.push_back(v.min_hd[cur]);
        cur = members[rng.next_below(members.size())];
        walk.nodes.push_back(cur);
    }
    return walk;
}

std::vector<Walk> all_walks(const VSets& v, const Rng& rng) {
    std::vector<Walk> walks;
    for (uint32_t sid = 0; sid < v.size(); ++sid) {
        if (!v.has(sid)) continue;
        Rng stream = rng.derive(sid);
        walks.push_back(build_walk(v, sid, stream));
    }
    return walks;
}

PlopRule default_plop_rule() {
    // Compare against the shortest approach. Demanding the out-step beat
    // the longest approach instead (strict_plop_rule) vetoes any peak that
    // sits inside a farther, less fit point's V set; on rugged landscapes
    // that discards most true local optima, so it is not the default.
    return [](uint32_t out_step, const std::vector<uint32_t>& in_steps) {
        return out_step > *std::min_element(in_steps.begin(), in_steps.end());
    };
}

PlopRule strict_plop_rule() {
    return [](uint32_t out_step, const std::vector<uint32_t>& in_steps) {
        return out_step > *std::max_element(in_steps.begin(), in_steps.end());
    };
}

PlopReport detect_plops(const VSets& v, const PlopRule& rule) {
    std::vector<std::vector<uint32_t>> incoming(v.size());
    for (size_t u = 0; u < v.size(); ++u) {
        for (uint32_t s : v.members[u]) incoming[s].push_back(v.min_hd[u]);
    }
    PlopReport report;
    for (uint32_t sid = 0; sid < v.size(); ++sid) {
        if (!v.has(sid) || incoming[sid].empty()) continue;
        std::sort(incoming[sid].begin(), incoming[sid].end());
        if (rule(v.min_hd[sid], incoming[sid])) {
            report.sids.push_back(sid);
            report.out_steps.push_back(v.min_hd[sid]);
            report.in_steps.push_back(std::move(incoming[sid]));
        }
    }
    return report;
}

double plef(const FitnessFunction& f, const BitString& s) {
    if (s.size() != f.length()) throw std::invalid_argument("string length does not match");
    const double base = f.evaluate(s);
    size_t not_fitter = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (f.evaluate(s.flipped(i)) <= base) ++not_fitter;
    }
    return static_cast<double>(not_fitter) / static_cast<double>(s.size());
}

double overlap(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() && b.empty()) throw std::invalid_argument("overlap of two empty sets");
    std::vector<uint32_t> sa = a;
    std::vector<uint32_t> sb = b;
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    std::sort(sb.begin(), sb.end());
    sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
    std::vector<uint32_t> both;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
    const size_t unions = sa.size() + sb.size() - both.size();
    return static_cast<double>(both.size()) / static_cast<double>(unions);
}

PlefTestResult plef_test(const FitnessFunction& f, const Sample& sample, const VSets& v,
                         const PlopRule& rule) {
    if (v.size() != sample.size()) throw std::invalid_argument("V sets do not match the sample");
    PlefTestResult result;
    for (uint32_t sid = 0; sid < sample.size(); ++sid) {
        if (plef(f, sample.get(sid)) == 1.0) result.full_optima.push_back(sid);
    }
    result.plops = detect_plops(v, rule).sids;
    result.jaccard = overlap(result.full_optima, result.plops);
    return result;
}

} // namespace bwalk::walks
