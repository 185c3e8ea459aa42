#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bwalk/pattern.hpp"
#include "bwalk/sample.hpp"
#include "bwalk/vsets.hpp"

namespace bwalk::bliss {

enum class Mode {
    Standard,          ///< one record per (string, window) under the pattern
    AllPairs,          ///< single all-positions window; one empty-key record per string
    SingletonClusters, ///< single empty window; the full string is the key
};

struct Options {
    Mode mode = Mode::Standard;
    /// Reorder the sample ascending by fitness before building records.
    /// Results are reported in the caller's sid space either way.
    bool presort_by_fitness = false;
    /// Skip re-evaluating a pair already compared earlier in the run.
    /// Off by default: repeats are cheap and the trace then matches the
    /// plain sequential scan.
    bool dedup_pairs = false;
    bool record_trace = false;
};

/// Sortable exclusion-subsequence records in struct-of-arrays form. Row r
/// owns key bytes [r*key_bytes, (r+1)*key_bytes) in little-endian byte
/// order; the logical key is sid:wid:y from most to least significant, so
/// ascending key order groups equal (wid, y) and orders clusters by wid
/// then subsequence.
struct RecordTable {
    size_t key_bytes = 0;
    size_t y_bits = 0;
    size_t wid_bits = 0;
    size_t sid_bits = 0;
    std::vector<uint8_t> keys;
    std::vector<uint32_t> sids;

    size_t size() const { return sids.size(); }

    const uint8_t* key(size_t r) const { return keys.data() + r * key_bytes; }

    /// Rendering of row r's key as a binary string (sid, wid, y fields in
    /// that order), padded to the full key width.
    std::string key_string(size_t r) const;
};

RecordTable build_records(const Sample& sample, const Pattern& pattern, Mode mode);

/// Stable LSD radix sort of the rows by key, ascending.
void radix_sort(RecordTable& table);

/// One fitter-pair comparison performed during the scan.
struct TracePair {
    uint32_t less_fit;
    uint32_t more_fit;
    uint32_t hd;
};

/// Per-cluster scan log: the working set at pairing time and the pairs
/// compared.
struct TraceCluster {
    std::vector<uint32_t> working_set;
    std::vector<TracePair> pairs;
};

struct ScanTrace {
    std::vector<TraceCluster> clusters;

    size_t total_pairs() const {
        size_t t = 0;
        for (const auto& c : clusters) t += c.pairs.size();
        return t;
    }
};

/// Result of one clustering run over one pattern.
struct RunResult {
    VSets vsets;
    size_t num_records = 0;
    size_t num_clusters = 0;
    size_t num_pairs = 0;
    ScanTrace trace; ///< filled only when Options::record_trace
};

/// Walk the sorted records cluster by cluster, comparing each working-set
/// string against the strictly fitter ones and carrying the fittest
/// members forward into the next cluster. Only dedup_pairs and
/// record_trace of opts apply here.
RunResult scan_clusters(const RecordTable& sorted, const Sample& sample,
                        const Options& opts = {});

/// build_records + radix_sort + scan_clusters for one pattern.
RunResult bliss_run(const Sample& sample, const Pattern& pattern, const Options& opts = {});

} // namespace bwalk::bliss
