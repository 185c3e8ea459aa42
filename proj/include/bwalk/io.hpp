#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bwalk/fitness.hpp"
#include "bwalk/sample.hpp"
#include "bwalk/sampler.hpp"
#include "bwalk/vsets.hpp"
#include "bwalk/walks.hpp"

namespace bwalk::io {

/// Sample file: `N=<length>` header, then one `<bits>,<fitness>` line per
/// string in sid order.
void write_sample(std::ostream& out, const Sample& sample);
Sample read_sample(std::istream& in);

/// Landscape file: either `NK <n> <k> <seed>` for a generated instance or
/// `NKTABLES <n> <k>` followed by per-position neighbor and table lines.
void write_landscape(std::ostream& out, const NkLandscape& f, bool explicit_tables = false);
NkLandscape read_landscape(std::istream& in);

/// V-set file: one `sid,min_hd,member;member;...` line per sid in sid
/// order; fittest strings keep both fields empty (`sid,,`).
void write_vsets(std::ostream& out, const VSets& v);
VSets read_vsets(std::istream& in);

/// Walk file: `start:sid>sid>...;steps=s1,s2,...` per walk.
void write_walks(std::ostream& out, const std::vector<walks::Walk>& ws);
std::vector<walks::Walk> read_walks(std::istream& in);

/// One sid per line.
void write_sids(std::ostream& out, const std::vector<uint32_t>& sids);
std::vector<uint32_t> read_sids(std::istream& in);

/// Sampler sidecar: run metadata as `key=value` lines.
void write_wl_meta(std::ostream& out, const sampler::WlRun& run, size_t max_sample);

/// Stats table row.
struct StatsRow {
    std::string problem;
    std::string sample_kind;
    std::string statistic;
    double mean = 0.0;
    double ci95 = 0.0;
};

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows);

std::string slurp_file(const std::string& path);

/// Write via a temporary file in the same directory, then rename onto the
/// target, so readers never observe a half-written file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace bwalk::io
