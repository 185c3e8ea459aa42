#include "bwalk/bliss.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_set>

namespace bwalk::bliss {

namespace {

// Bits needed to distinguish `count` values.
size_t ceil_log2(size_t count) {
    size_t bits = 0;
    while ((size_t{1} << bits) < count) ++bits;
    return bits;
}

void set_bit(uint8_t* key, size_t bit) { key[bit / 8] |= uint8_t(1u << (bit % 8)); }

} // namespace

std::string RecordTable::key_string(size_t r) const {
    const size_t logical = sid_bits + wid_bits + y_bits;
    const size_t width = (logical + 7) / 8 * 8;
    std::string text(width, '0');
    const uint8_t* k = key(r);
    for (size_t b = 0; b < wid_bits + y_bits; ++b) {
        if ((k[b / 8] >> (b % 8)) & 1u) text[width - 1 - b] = '1';
    }
    const uint32_t sid = sids[r];
    for (size_t b = 0; b < sid_bits; ++b) {
        if ((sid >> b) & 1u) text[width - 1 - (wid_bits + y_bits + b)] = '1';
    }
    return text;
}

RecordTable build_records(const Sample& sample, const Pattern& pattern, Mode mode) {
    const size_t n = sample.length();
    RecordTable t;
    t.sid_bits = ceil_log2(sample.size());

    size_t num_windows = 1;
    if (mode == Mode::AllPairs) {
        t.y_bits = 0;
        t.wid_bits = 0;
    } else if (mode == Mode::SingletonClusters) {
        t.y_bits = n;
        t.wid_bits = 0;
    } else {
        if (pattern.length() != n) {
            throw std::invalid_argument("pattern length does not match the sample");
        }
        num_windows = pattern.num_windows();
        if (n % num_windows != 0) {
            throw std::invalid_argument("standard mode needs equal-size windows");
        }
        const size_t w = n / num_windows;
        for (size_t wid = 0; wid < num_windows; ++wid) {
            if (pattern.kept_positions(static_cast<uint32_t>(wid)).size() != n - w) {
                throw std::invalid_argument("standard mode needs equal-size windows");
            }
        }
        t.y_bits = n - w;
        t.wid_bits = ceil_log2(num_windows);
    }
    t.key_bytes = (t.y_bits + t.wid_bits + 7) / 8;

    const size_t num_records = sample.size() * num_windows;
    t.keys.assign(num_records * t.key_bytes, 0);
    t.sids.resize(num_records);

    size_t r = 0;
    for (size_t sid = 0; sid < sample.size(); ++sid) {
        for (size_t wid = 0; wid < num_windows; ++wid, ++r) {
            t.sids[r] = static_cast<uint32_t>(sid);
            uint8_t* key = t.keys.data() + r * t.key_bytes;
            if (mode == Mode::SingletonClusters) {
                for (size_t pos = 0; pos < n; ++pos) {
                    if (sample.bit(sid, pos)) set_bit(key, n - 1 - pos);
                }
            } else if (mode == Mode::Standard) {
                const auto& kept = pattern.kept_positions(static_cast<uint32_t>(wid));
                for (size_t j = 0; j < kept.size(); ++j) {
                    if (sample.bit(sid, kept[j])) set_bit(key, kept.size() - 1 - j);
                }
                for (size_t b = 0; b < t.wid_bits; ++b) {
                    if ((wid >> b) & 1u) set_bit(key, t.y_bits + b);
                }
            }
        }
    }
    return t;
}

void radix_sort(RecordTable& t) {
    const size_t nrec = t.size();
    if (t.key_bytes == 0 || nrec < 2) return;
    std::vector<uint8_t> keys_tmp(t.keys.size());
    std::vector<uint32_t> sids_tmp(nrec);
    const size_t kb = t.key_bytes;
    for (size_t byte = 0; byte < kb; ++byte) {
        size_t count[256] = {0};
        for (size_t r = 0; r < nrec; ++r) ++count[t.keys[r * kb + byte]];
        size_t offset[256];
        size_t running = 0;
        for (size_t v = 0; v < 256; ++v) {
            offset[v] = running;
            running += count[v];
        }
        for (size_t r = 0; r < nrec; ++r) {
            const size_t dst = offset[t.keys[r * kb + byte]]++;
            std::memcpy(keys_tmp.data() + dst * kb, t.keys.data() + r * kb, kb);
            sids_tmp[dst] = t.sids[r];
        }
        t.keys.swap(keys_tmp);
        t.sids.swap(sids_tmp);
    }
}

RunResult scan_clusters(const RecordTable& t, const Sample& sample, const Options& opts) {
    RunResult res;
    res.num_records = t.size();
    res.vsets = VSets(sample.size());
    if (t.size() == 0) return res;

    const auto& fit = sample.fitnesses();
    std::vector<uint32_t> carried; // fittest of the previous working set, sid ascending
    std::vector<uint32_t> work;
    std::vector<uint32_t> order;
    std::unordered_set<uint64_t> seen_pairs;

    size_t begin = 0;
    while (begin < t.size()) {
        size_t end = begin + 1;
        while (end < t.size() &&
               std::memcmp(t.key(end), t.key(begin), t.key_bytes) == 0) {
            ++end;
        }
        ++res.num_clusters;

        work = carried;
        for (size_t r = begin; r < end; ++r) {
            const uint32_t sid = t.sids[r];
            if (!std::binary_search(carried.begin(), carried.end(), sid)) {
                work.push_back(sid);
            }
        }

        TraceCluster tc;
        if (opts.record_trace) tc.working_set = work;

        order = work;
        std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            return fit[a] < fit[b] || (fit[a] == fit[b] && a < b);
        });
        for (size_t i = 0; i + 1 < order.size(); ++i) {
            for (size_t j = i + 1; j < order.size(); ++j) {
                const uint32_t a = order[i];
                const uint32_t b = order[j];
                if (fit[b] <= fit[a]) continue; // ties: neither is fitter
                if (opts.dedup_pairs) {
                    const uint64_t pk = (uint64_t{std::min(a, b)} << 32) | std::max(a, b);
                    if (!seen_pairs.insert(pk).second) continue;
                }
                const auto hd = static_cast<uint32_t>(sample.hamming(a, b));
                res.vsets.offer(a, b, hd);
                ++res.num_pairs;
                if (opts.record_trace) tc.pairs.push_back({a, b, hd});
            }
        }

        double best = fit[work.front()];
        for (uint32_t sid : work) best = std::max(best, fit[sid]);
        carried.clear();
        for (uint32_t sid : work) {
            if (fit[sid] == best) carried.push_back(sid);
        }
        std::sort(carried.begin(), carried.end());

        if (opts.record_trace) res.trace.clusters.push_back(std::move(tc));
        begin = end;
    }
    res.vsets.normalize();
    return res;
}

RunResult bliss_run(const Sample& sample, const Pattern& pattern, const Options& opts) {
    if (!opts.presort_by_fitness) {
        RecordTable t = build_records(sample, pattern, opts.mode);
        radix_sort(t);
        return scan_clusters(t, sample, opts);
    }

    std::vector<uint32_t> perm;
    Sample sorted = sort_by_fitness(sample, &perm);
    RecordTable t = build_records(sorted, pattern, opts.mode);
    radix_sort(t);
    RunResult inner = scan_clusters(t, sorted, opts);

    // Report in the caller's sid space.
    RunResult out;
    out.num_records = inner.num_records;
    out.num_clusters = inner.num_clusters;
    out.num_pairs = inner.num_pairs;
    out.vsets = VSets(sample.size());
    for (size_t sid = 0; sid < inner.vsets.size(); ++sid) {
        if (inner.vsets.members[sid].empty()) continue;
        auto& dst = out.vsets.members[perm[sid]];
        out.vsets.min_hd[perm[sid]] = inner.vsets.min_hd[sid];
        dst.reserve(inner.vsets.members[sid].size());
        for (uint32_t v : inner.vsets.members[sid]) dst.push_back(perm[v]);
    }
    out.vsets.normalize();
    if (opts.record_trace) {
        out.trace.clusters.reserve(inner.trace.clusters.size());
        for (auto& tc : inner.trace.clusters) {
            TraceCluster mapped;
            mapped.working_set.reserve(tc.working_set.size());
            for (uint32_t sid : tc.working_set) mapped.working_set.push_back(perm[sid]);
            mapped.pairs.reserve(tc.pairs.size());
            for (const auto& p : tc.pairs) {
                mapped.pairs.push_back({perm[p.less_fit], perm[p.more_fit], p.hd});
            }
            out.trace.clusters.push_back(std::move(mapped));
        }
    }
    return out;
}

} // namespace bwalk::bliss
