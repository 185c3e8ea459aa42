#include "bwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace bwalk::stats {

namespace {

constexpr double kZ95 = 1.959964;

struct MeanCi {
    double mean = 0.0;
    double ci = 0.0;
};

MeanCi mean_ci(const std::vector<double>& xs) {
    MeanCi out;
    const auto n = static_cast<double>(xs.size());
    for (double x : xs) out.mean += x;
    out.mean /= n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.ci = kZ95 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return out;
}

} // namespace

std::vector<uint32_t> compress(const std::vector<uint32_t>& steps) {
    if (steps.empty()) throw std::invalid_argument("cannot compress an empty step sequence");
    std::vector<uint32_t> out;
    out.push_back(steps.front());
    for (size_t i = 1; i < steps.size(); ++i) {
        if (steps[i] != out.back()) out.push_back(steps[i]);
    }
    return out;
}

StepStats step_stats(const std::vector<uint32_t>& steps) {
    if (steps.empty()) throw std::invalid_argument("step statistics need at least one step");
    StepStats st;
    st.wlen = steps.size();
    uint32_t lo = steps.front();
    uint32_t hi = steps.front();
    size_t run = 1;
    std::set<uint32_t> distinct;
    for (size_t i = 0; i < steps.size(); ++i) {
        st.wdist += steps[i];
        lo = std::min(lo, steps[i]);
        hi = std::max(hi, steps[i]);
        distinct.insert(steps[i]);
        if (i > 0) {
            run = steps[i] == steps[i - 1] ? run + 1 : 1;
        }
        st.adaptlen = std::max(st.adaptlen, run);
    }
    const auto cw = compress(steps);
    st.cwlen = cw.size();
    for (uint32_t s : cw) st.cwdist += s;
    st.cr1 = static_cast<double>(st.cwlen) / static_cast<double>(st.wlen);
    st.cr2 = static_cast<double>(st.cwdist) / static_cast<double>(st.wdist);
    st.variation = distinct.size();
    st.range = hi - lo;
    return st;
}

AggregateStats aggregate(const std::vector<InstanceStats>& instances) {
    if (instances.empty()) throw std::invalid_argument("aggregate needs at least one instance");
    std::vector<double> cr1s, cr2s, steps, adapts, vars, ranges, wlens;
    for (const auto& inst : instances) {
        if (inst.walks.empty()) {
            throw std::invalid_argument("every instance needs at least one walk");
        }
        double cr1 = 0, cr2 = 0, adapt = 0, var = 0, range = 0, wlen = 0;
        size_t dist_total = 0, len_total = 0;
        for (const auto& w : inst.walks) {
            cr1 += w.cr1;
            cr2 += w.cr2;
            adapt += static_cast<double>(w.adaptlen);
            var += static_cast<double>(w.variation);
            range += static_cast<double>(w.range);
            wlen += static_cast<double>(w.wlen);
            dist_total += w.wdist;
            len_total += w.wlen;
        }
        const auto nw = static_cast<double>(inst.walks.size());
        cr1s.push_back(cr1 / nw);
        cr2s.push_back(cr2 / nw);
        adapts.push_back(adapt / nw);
        vars.push_back(var / nw);
        ranges.push_back(range / nw);
        wlens.push_back(wlen / nw);
        // Average step size pools every step of the instance, not per walk.
        steps.push_back(static_cast<double>(dist_total) / static_cast<double>(len_total));
    }
    AggregateStats agg;
    agg.instances = instances.size();
    MeanCi mc;
    mc = mean_ci(cr1s), agg.cr1 = mc.mean, agg.cr1_ci = mc.ci;
    mc = mean_ci(cr2s), agg.cr2 = mc.mean, agg.cr2_ci = mc.ci;
    mc = mean_ci(steps), agg.avg_step = mc.mean, agg.avg_step_ci = mc.ci;
    mc = mean_ci(adapts), agg.adaptlen = mc.mean, agg.adaptlen_ci = mc.ci;
    mc = mean_ci(vars), agg.variation = mc.mean, agg.variation_ci = mc.ci;
    mc = mean_ci(ranges), agg.range = mc.mean, agg.range_ci = mc.ci;
    mc = mean_ci(wlens), agg.wlen = mc.mean, agg.wlen_ci = mc.ci;
    return agg;
}

Discretized discretize(double cr1, double avg_step, double variation, double range) {
    Discretized d;
    d.c = std::llround(10.0 * cr1);
    d.s = std::llround(avg_step);
    d.v = std::llround(variation);
    d.r = std::llround(range);
    return d;
}

Discretized discretize(const AggregateStats& agg) {
    return discretize(agg.cr1, agg.avg_step, agg.variation, agg.range);
}

std::vector<CapabilityDescription> describe(const std::vector<Discretized>& fingerprints,
                                            const std::string& letters) {
    if (letters.size() != 4) throw std::invalid_argument("need one delimiter letter per code");
    std::vector<CapabilityDescription> out;
    if (fingerprints.empty()) return out;
    int64_t cmax = 0, smax = 0, vmax = 0, rmax = 0;
    for (const auto& fp : fingerprints) {
        if (fp.c < 0 || fp.s < 0 || fp.v < 0 || fp.r < 0) {
            throw std::invalid_argument("capability codes must be non-negative");
        }
        cmax = std::max(cmax, fp.c);
        smax = std::max(smax, fp.s);
        vmax = std::max(vmax, fp.v);
        rmax = std::max(rmax, fp.r);
    }
    const int64_t widths[4] = {cmax, smax, vmax, rmax};
    for (const auto& fp : fingerprints) {
        const int64_t codes[4] = {fp.c, fp.s, fp.v, fp.r};
        CapabilityDescription d;
        for (size_t i = 0; i < 4; ++i) {
            d.text.push_back(letters[i]);
            d.text.append(static_cast<size_t>(codes[i]), '1');
            d.text.append(static_cast<size_t>(widths[i] - codes[i]), '0');
            d.gap_count += static_cast<size_t>(widths[i] - codes[i]);
        }
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace bwalk::stats
