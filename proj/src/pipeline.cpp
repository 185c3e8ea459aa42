#include "bwalk/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bwalk/errors.hpp"
#include "bwalk/oracle.hpp"
#include "bwalk/parallel.hpp"
#include "bwalk/stats.hpp"
#include "bwalk/walks.hpp"

namespace bwalk::pipeline {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

Sample demo_sample() {
    const char* strings[] = {"0101", "0011", "1010", "1101", "1011", "1000"};
    Sample s(4);
    for (size_t i = 0; i < 6; ++i) {
        s.add(BitString::from_string(strings[i]), static_cast<double>(i));
    }
    return s;
}

std::string cluster_name(size_t index) {
    if (index < 26) return std::string(1, static_cast<char>('A' + index));
    return "#" + std::to_string(index);
}

void print_vsets(std::ostream& out, const VSets& v) {
    for (size_t sid = 0; sid < v.size(); ++sid) {
        out << "  V(" << sid << ") = {";
        for (size_t i = 0; i < v.members[sid].size(); ++i) {
            if (i) out << ",";
            out << v.members[sid][i];
        }
        out << "}";
        if (v.has(sid)) out << " at HD " << v.min_hd[sid];
        out << "\n";
    }
    out << "  mean b-minimal HD = " << mean_b_min_hd(v) << "\n";
}

void print_trace(std::ostream& out, const bliss::ScanTrace& trace) {
    for (size_t c = 0; c < trace.clusters.size(); ++c) {
        const auto& tc = trace.clusters[c];
        out << "  cluster " << cluster_name(c) << ": working set {";
        for (size_t i = 0; i < tc.working_set.size(); ++i) {
            if (i) out << ",";
            out << tc.working_set[i];
        }
        out << "} pairs";
        if (tc.pairs.empty()) out << " none";
        for (const auto& p : tc.pairs) {
            out << " (" << p.less_fit << "," << p.more_fit << ")@" << p.hd;
        }
        out << "\n";
    }
    out << "  pairs evaluated = " << trace.total_pairs() << "\n";
}

struct MeanSd {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double sd = 0.0;
    size_t count = 0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    out.count = xs.size();
    if (xs.empty()) return out;
    double total = 0.0;
    for (double x : xs) total += x;
    out.mean = total / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

std::string join_ks(const std::vector<size_t>& ks) {
    std::string out;
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(ks[i]);
    }
    return out;
}

} // namespace

void write_config(std::ostream& out, const RunConfig& cfg) {
    out << "n=" << cfg.n << "\n";
    out << "k=" << join_ks(cfg.ks) << "\n";
    out << "seed=" << cfg.seed << "\n";
    out << "instances=" << cfg.instances << "\n";
    out << "sample=" << cfg.sample_kind << "\n";
    out << "max_sample=" << cfg.max_sample << "\n";
    out << "windows=" << cfg.windows << "\n";
    out << "patterns=" << cfg.patterns << "\n";
    out << "pattern_source=" << cfg.pattern_source << "\n";
    out << "presort_fitness=" << (cfg.presort_fitness ? 1 : 0) << "\n";
    out << "pattern=" << cfg.pattern_digits << "\n";
    out << "out=" << cfg.out_dir << "\n";
    out << "workers=" << cfg.workers << "\n";
}

RunConfig read_config(std::istream& in) {
    RunConfig cfg;
    cfg.ks.clear();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line needs key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        try {
            if (key == "n") {
                cfg.n = std::stoul(value);
            } else if (key == "k") {
                std::istringstream ks(value);
                std::string item;
                while (std::getline(ks, item, ',')) cfg.ks.push_back(std::stoul(item));
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "instances") {
                cfg.instances = std::stoul(value);
            } else if (key == "sample") {
                cfg.sample_kind = value;
            } else if (key == "max_sample") {
                cfg.max_sample = std::stoul(value);
            } else if (key == "windows") {
                cfg.windows = std::stoul(value);
            } else if (key == "patterns") {
                cfg.patterns = std::stoul(value);
            } else if (key == "pattern_source") {
                cfg.pattern_source = value;
            } else if (key == "presort_fitness") {
                cfg.presort_fitness = value == "1" || value == "true";
            } else if (key == "pattern") {
                cfg.pattern_digits = value;
            } else if (key == "out") {
                cfg.out_dir = value;
            } else if (key == "workers") {
                cfg.workers = std::stoul(value);
            } else {
                throw std::invalid_argument("unknown config key: " + key);
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed config value for " + key + ": '" + value + "'");
        }
    }
    if (cfg.ks.empty()) cfg.ks.push_back(4);
    return cfg;
}

Sample make_sample(const FitnessFunction& f, const RunConfig& cfg, Rng& rng,
                   sampler::WlRun* wl_out) {
    if (cfg.sample_kind == "enum") {
        return sampler::enum_sample(f);
    }
    if (cfg.sample_kind != "rand" && cfg.sample_kind != "awl") {
        throw std::invalid_argument("unknown sample kind: " + cfg.sample_kind);
    }
    // 0 means "as many strings as enumeration would give", for rand and
    // awl alike; the cap also keeps awl from walking forever when outlying
    // histogram bins are unreachable.
    size_t count = cfg.max_sample;
    if (count == 0) {
        if (f.length() > 26) {
            throw ResourceError("a full-size " + cfg.sample_kind + " sample of 2^" +
                                std::to_string(f.length()) + " strings exceeds the budget");
        }
        count = size_t{1} << f.length();
    }
    if (cfg.sample_kind == "rand") {
        return sampler::rand_sample(f, count, rng);
    }
    sampler::WlConfig wc;
    wc.max_sample = count;
    sampler::WlRun run = sampler::wang_landau(f, wc, rng);
    Sample sample = std::move(run.sample);
    if (wl_out) {
        run.sample = Sample(f.length(), Origin::Awl);
        *wl_out = std::move(run);
    }
    return sample;
}

std::vector<Pattern> make_patterns(const Sample& sample, const RunConfig& cfg, Rng& rng) {
    if (!cfg.pattern_digits.empty()) {
        Pattern p = Pattern::from_digits(cfg.pattern_digits);
        if (p.length() != sample.length()) {
            throw std::invalid_argument("explicit pattern length does not match the sample");
        }
        return {p};
    }
    if (cfg.pattern_source != "good" && cfg.pattern_source != "random") {
        throw std::invalid_argument("pattern source must be good or random");
    }
    const size_t count = std::max<size_t>(cfg.patterns, 1);
    std::vector<Pattern> out;
    out.reserve(count);
    if (cfg.pattern_source == "good") {
        out.push_back(good_pattern(sample, cfg.windows));
    }
    while (out.size() < count) {
        out.push_back(random_pattern(sample.length(), cfg.windows, rng));
    }
    return out;
}

VSets approximate_vsets(const Sample& sample, const RunConfig& cfg, Rng& rng) {
    const auto patterns = make_patterns(sample, cfg, rng);
    bliss::Options opts;
    opts.presort_by_fitness = cfg.presort_fitness;
    std::vector<VSets> runs;
    runs.reserve(patterns.size());
    for (const auto& p : patterns) {
        runs.push_back(bliss::bliss_run(sample, p, opts).vsets);
    }
    return combine(runs);
}

int cmd_demo(std::ostream& out) {
    Sample s = demo_sample();
    out << "six-string worked example (fitness = sid)\n";
    for (size_t sid = 0; sid < s.size(); ++sid) {
        out << "  sid " << sid << "  " << s.get(sid).to_string() << "  F=" << s.fitness(sid)
            << "\n";
    }

    const auto levels = identity_level(s);
    out << "identity levels:";
    for (double v : levels) out << " " << v;
    out << "\n";
    out << "identity-derived pattern (m=2): " << good_pattern(s, 2).to_digits() << "\n\n";

    bliss::Options traced;
    traced.record_trace = true;

    for (const std::string digits : {"1100", "0110", "0101"}) {
        const Pattern p = Pattern::from_digits(digits);
        out << "pattern " << digits << "\n";
        bliss::RecordTable table = bliss::build_records(s, p, bliss::Mode::Standard);
        out << "  records (sid:wid:y):";
        for (size_t r = 0; r < table.size(); ++r) out << " " << table.key_string(r);
        out << "\n";
        bliss::radix_sort(table);
        out << "  sorted sids:";
        for (size_t r = 0; r < table.size(); ++r) out << " " << table.sids[r];
        out << "\n";
        const auto run = bliss::scan_clusters(table, s, traced);
        out << "  clusters = " << run.num_clusters << "\n";
        print_trace(out, run.trace);
        print_vsets(out, run.vsets);
        out << "\n";
    }

    const Pattern unused = Pattern::blocks(4, 1);
    out << "all-pairs mode (single all-positions window)\n";
    bliss::Options ap = traced;
    ap.mode = bliss::Mode::AllPairs;
    const auto ap_run = bliss::bliss_run(s, unused, ap);
    out << "  clusters = " << ap_run.num_clusters << ", pairs = " << ap_run.num_pairs << "\n";
    print_vsets(out, ap_run.vsets);
    out << "\n";

    out << "singleton-cluster mode (single empty window)\n";
    bliss::Options sc = traced;
    sc.mode = bliss::Mode::SingletonClusters;
    const auto sc_run = bliss::bliss_run(s, unused, sc);
    out << "  clusters = " << sc_run.num_clusters << ", pairs = " << sc_run.num_pairs << "\n";
    print_vsets(out, sc_run.vsets);
    out << "\n";

    const auto run_1100 = bliss::bliss_run(s, Pattern::from_digits("1100"));
    const auto run_0110 = bliss::bliss_run(s, Pattern::from_digits("0110"));
    const VSets merged = combine({run_1100.vsets, run_0110.vsets});
    out << "combined 1100 + 0110\n";
    print_vsets(out, merged);
    out << "\n";

    out << "walks over the 0110 V sets\n";
    const auto ws = walks::all_walks(run_0110.vsets, Rng(2026));
    for (const auto& w : ws) {
        out << "  ";
        for (size_t i = 0; i < w.nodes.size(); ++i) {
            if (i) out << " -> ";
            out << w.nodes[i];
        }
        out << "  steps";
        for (uint32_t st : w.steps) out << " " << st;
        out << "\n";
    }
    const auto plops = walks::detect_plops(run_0110.vsets);
    out << "peaks:";
    for (uint32_t sid : plops.sids) out << " " << sid;
    out << "\n";
    return 0;
}

namespace {

struct InstanceOutcome {
    stats::InstanceStats walk_stats;
    double overlap = std::numeric_limits<double>::quiet_NaN();
    double mean_hd = 0.0;
    double eval_ratio = 1.0;
    double t_sample = 0.0;
    double t_cluster = 0.0;
    double t_walks = 0.0;
};

} // namespace

int cmd_pipeline(const RunConfig& cfg, std::ostream& out) {
    if (cfg.instances == 0) throw std::invalid_argument("instance count must be positive");
    if (cfg.ks.empty()) throw std::invalid_argument("need at least one k value");
    for (size_t k : cfg.ks) {
        if (k >= cfg.n) throw std::invalid_argument("every k must satisfy k < n");
    }
    if (cfg.sample_kind != "enum" && cfg.sample_kind != "rand" && cfg.sample_kind != "awl") {
        throw std::invalid_argument("unknown sample kind: " + cfg.sample_kind);
    }
    if (cfg.sample_kind == "enum" && cfg.n > 26) {
        const double gib = std::ldexp(16.0, static_cast<int>(cfg.n)) / (1 << 30);
        std::ostringstream msg;
        msg << "enumerating 2^" << cfg.n << " strings needs about " << std::fixed
            << std::setprecision(1) << gib << " GiB of sample storage; refusing";
        throw ResourceError(msg.str());
    }

    namespace fs = std::filesystem;
    const bool keep_files = !cfg.out_dir.empty();
    if (keep_files) fs::create_directories(cfg.out_dir);

    std::vector<io::StatsRow> rows;
    std::ostringstream summary;

    for (size_t k : cfg.ks) {
        std::vector<InstanceOutcome> outcomes(cfg.instances);
        parallel_for(cfg.instances, cfg.workers, [&](size_t inst) {
            const uint64_t iseed = cfg.seed + inst;
            const NkLandscape land(cfg.n, k, iseed);
            Rng sample_rng = Rng(iseed).derive(1);
            Rng pattern_rng = Rng(iseed).derive(2);
            Rng walk_rng = Rng(iseed).derive(3);

            InstanceOutcome oc;
            const auto t0 = Clock::now();
            sampler::WlRun wl;
            const Sample sample = make_sample(land, cfg, sample_rng, &wl);
            const auto t1 = Clock::now();
            const VSets v = approximate_vsets(sample, cfg, pattern_rng);
            const auto t2 = Clock::now();
            const auto ws = walks::all_walks(v, walk_rng);
            for (const auto& w : ws) oc.walk_stats.walks.push_back(stats::step_stats(w.steps));

            const auto plops = walks::detect_plops(v);
            std::vector<uint32_t> optima;
            for (uint32_t sid = 0; sid < sample.size(); ++sid) {
                if (walks::plef(land, sample.get(sid)) == 1.0) optima.push_back(sid);
            }
            if (!(optima.empty() && plops.sids.empty())) {
                oc.overlap = walks::overlap(optima, plops.sids);
            }
            const auto t3 = Clock::now();

            oc.mean_hd = mean_b_min_hd(v);
            if (cfg.sample_kind == "awl") {
                oc.eval_ratio = static_cast<double>(wl.evaluations) /
                                static_cast<double>(sample.size());
            }
            oc.t_sample = seconds_between(t0, t1);
            oc.t_cluster = seconds_between(t1, t2);
            oc.t_walks = seconds_between(t2, t3);

            if (keep_files) {
                const std::string prefix =
                    (fs::path(cfg.out_dir) /
                     ("k" + std::to_string(k) + "_i" + std::to_string(inst) + "_"))
                        .string();
                std::ostringstream buf;
                io::write_sample(buf, sample);
                io::write_file_atomic(prefix + "sample.txt", buf.str());
                buf.str("");
                io::write_vsets(buf, v);
                io::write_file_atomic(prefix + "vsets.txt", buf.str());
                buf.str("");
                io::write_walks(buf, ws);
                io::write_file_atomic(prefix + "walks.txt", buf.str());
                buf.str("");
                io::write_sids(buf, plops.sids);
                io::write_file_atomic(prefix + "plops.txt", buf.str());
                if (cfg.sample_kind == "awl") {
                    buf.str("");
                    io::write_wl_meta(buf, wl, cfg.max_sample);
                    io::write_file_atomic(prefix + "wl.txt", buf.str());
                }
            }
            outcomes[inst] = std::move(oc);
        });

        std::vector<stats::InstanceStats> per_instance;
        std::vector<double> overlaps, hds, ratios;
        double sample_time = 0.0, cluster_time = 0.0, walk_time = 0.0;
        for (auto& oc : outcomes) {
            per_instance.push_back(std::move(oc.walk_stats));
            if (!std::isnan(oc.overlap)) overlaps.push_back(oc.overlap);
            hds.push_back(oc.mean_hd);
            ratios.push_back(oc.eval_ratio);
            sample_time += oc.t_sample;
            cluster_time += oc.t_cluster;
            walk_time += oc.t_walks;
        }
        const auto agg = stats::aggregate(per_instance);
        const std::string problem =
            "NK(" + std::to_string(cfg.n) + "," + std::to_string(k) + ")";
        rows.push_back({problem, cfg.sample_kind, "cr1", agg.cr1, agg.cr1_ci});
        rows.push_back({problem, cfg.sample_kind, "cr2", agg.cr2, agg.cr2_ci});
        rows.push_back({problem, cfg.sample_kind, "avg_step", agg.avg_step, agg.avg_step_ci});
        rows.push_back({problem, cfg.sample_kind, "adaptlen", agg.adaptlen, agg.adaptlen_ci});
        rows.push_back({problem, cfg.sample_kind, "variation", agg.variation, agg.variation_ci});
        rows.push_back({problem, cfg.sample_kind, "range", agg.range, agg.range_ci});
        rows.push_back({problem, cfg.sample_kind, "wlen", agg.wlen, agg.wlen_ci});

        const MeanSd ov = mean_sd(overlaps);
        const MeanSd hd = mean_sd(hds);
        const MeanSd ratio = mean_sd(ratios);
        summary << problem << " sample=" << cfg.sample_kind
                << " instances=" << cfg.instances << "\n";
        if (ov.count > 0) {
            summary << "  overlap=" << ov.mean << " (sd " << ov.sd << ", " << ov.count
                    << " instances)\n";
        } else {
            summary << "  overlap=n/a (no local optima and no peaks detected)\n";
        }
        summary << "  mean_b_min_hd=" << hd.mean << " (sd " << hd.sd << ")\n";
        if (cfg.sample_kind == "awl") {
            summary << "  evaluations_per_sample=" << ratio.mean << " (sd " << ratio.sd << ")\n";
        }
        summary << "  stage_seconds sample=" << sample_time << " cluster=" << cluster_time
                << " walks=" << walk_time << "\n";
    }

    std::ostringstream csv;
    io::write_stats_csv(csv, rows);
    out << summary.str() << "\n" << csv.str();

    if (keep_files) {
        namespace fs = std::filesystem;
        io::write_file_atomic((fs::path(cfg.out_dir) / "stats.csv").string(), csv.str());
        io::write_file_atomic((fs::path(cfg.out_dir) / "summary.txt").string(), summary.str());
        std::ostringstream cfg_text;
        write_config(cfg_text, cfg);
        io::write_file_atomic((fs::path(cfg.out_dir) / "config.txt").string(), cfg_text.str());
    }
    return 0;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    if (cfg.instances == 0) throw std::invalid_argument("repeat count must be positive");
    if (cfg.ks.empty()) throw std::invalid_argument("need a k value");
    const size_t k = cfg.ks.front();
    if (k >= cfg.n) throw std::invalid_argument("k must satisfy k < n");
    const size_t size = cfg.max_sample ? cfg.max_sample : size_t{1} << 14;

    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> methods;
    for (size_t rep = 0; rep < cfg.instances; ++rep) {
        const uint64_t iseed = cfg.seed + rep;
        const NkLandscape land(cfg.n, k, iseed);
        Rng sample_rng = Rng(iseed).derive(1);
        Rng pattern_rng = Rng(iseed).derive(2);
        const Sample sample = sampler::rand_sample(land, size, sample_rng);

        const auto timed = oracle::all_pairs_timing(sample);
        methods["all-pairs"].first.push_back(timed.seconds);
        methods["all-pairs"].second.push_back(mean_b_min_hd(timed.vsets));

        for (size_t m : {size_t{2}, size_t{4}}) {
            if (cfg.n % m != 0) continue;
            const Pattern p = random_pattern(cfg.n, m, pattern_rng);
            bliss::Options opts;
            opts.presort_by_fitness = cfg.presort_fitness;
            const auto t0 = Clock::now();
            const auto run = bliss::bliss_run(sample, p, opts);
            const auto t1 = Clock::now();
            auto& slot = methods["bliss-m" + std::to_string(m)];
            slot.first.push_back(seconds_between(t0, t1));
            slot.second.push_back(mean_b_min_hd(run.vsets));
        }
    }

    std::ostringstream csv;
    csv << "size,n,method,seconds,seconds_sd,mean_b_min_hd,mean_b_min_hd_sd\n";
    for (const auto& [name, obs] : methods) {
        const MeanSd secs = mean_sd(obs.first);
        const MeanSd hd = mean_sd(obs.second);
        csv << size << "," << cfg.n << "," << name << "," << std::setprecision(10) << secs.mean
            << "," << secs.sd << "," << hd.mean << "," << hd.sd << "\n";
    }
    out << csv.str();
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        io::write_file_atomic(
            (std::filesystem::path(cfg.out_dir) / "bench.csv").string(), csv.str());
    }
    return 0;
}

} // namespace bwalk::pipeline
