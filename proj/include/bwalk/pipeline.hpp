#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bwalk/bliss.hpp"
#include "bwalk/fitness.hpp"
#include "bwalk/io.hpp"
#include "bwalk/sample.hpp"

namespace bwalk::pipeline {

/// Shared knobs for the command-level entry points. The CLI fills this
/// from flags or a stored config file; tests fill it directly.
struct RunConfig {
    size_t n = 16;
    std::vector<size_t> ks = {4};
    uint64_t seed = 1;
    size_t instances = 1;
    std::string sample_kind = "enum"; ///< enum | rand | awl
    size_t max_sample = 0;            ///< cap for rand/awl; 0 = full enumeration size
    size_t windows = 2;               ///< windows per pattern
    size_t patterns = 1;              ///< patterns whose runs are combined
    std::string pattern_source = "good"; ///< good (identity-level first) | random
    bool presort_fitness = true;
    std::string pattern_digits;       ///< explicit pattern; overrides pattern_source
    std::string out_dir;              ///< where file-producing commands write
    size_t workers = 1;               ///< 0 = all hardware threads
};

/// Key-value serialization of a config; a stored file re-executes to
/// identical outputs within one build.
void write_config(std::ostream& out, const RunConfig& cfg);
RunConfig read_config(std::istream& in);

/// Build the sample for one landscape according to cfg.sample_kind.
Sample make_sample(const FitnessFunction& f, const RunConfig& cfg, Rng& rng,
                   sampler::WlRun* wl_out = nullptr);

/// The pattern set one clustering run combines: the explicit pattern when
/// given; otherwise cfg.patterns of them, the first from identity levels
/// when pattern_source is "good", all random when "random".
std::vector<Pattern> make_patterns(const Sample& sample, const RunConfig& cfg, Rng& rng);

/// Combined V sets over cfg.patterns clustering runs.
VSets approximate_vsets(const Sample& sample, const RunConfig& cfg, Rng& rng);

/// Worked example on a six-string toy sample: prints records, sorted
/// order, clusters with pair comparisons, V sets, walks, and peaks.
int cmd_demo(std::ostream& out);

/// Full in-memory run per (k, instance): landscape, sample, V sets,
/// walks, statistics; writes one stats table.
int cmd_pipeline(const RunConfig& cfg, std::ostream& out);

/// Wall-clock comparison of the exact pair scan against the clustering
/// approximation on one sample.
int cmd_bench(const RunConfig& cfg, std::ostream& out);

} // namespace bwalk::pipeline
