#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bwalk/bliss.hpp"
#include "bwalk/errors.hpp"
#include "bwalk/io.hpp"
#include "bwalk/pipeline.hpp"
#include "bwalk/stats.hpp"
#include "bwalk/walks.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

/// Empty path means stdout; otherwise an atomic file write.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        bwalk::io::write_file_atomic(path, content);
    }
}

} // namespace

int main(int argc, char** argv) {
    using namespace bwalk;

    CLI::App app{"exploration toolkit for fitness landscapes over binary strings"};
    app.require_subcommand(1);

    // demo
    auto* demo = app.add_subcommand("demo", "print the six-string worked example end to end");
    demo->callback([] { pipeline::cmd_demo(std::cout); });

    // gen
    struct {
        size_t n = 16, k = 4;
        uint64_t seed = 1;
        bool tables = false;
        std::string out;
    } gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate an NK landscape instance");
    gen_cmd->add_option("--n", gen.n, "string length");
    gen_cmd->add_option("--k", gen.k, "interacting positions per locus");
    gen_cmd->add_option("--seed", gen.seed, "instance seed");
    gen_cmd->add_flag("--tables", gen.tables, "store explicit tables instead of the seed");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");
    gen_cmd->callback([&gen] {
        const NkLandscape land(gen.n, gen.k, gen.seed);
        std::ostringstream buf;
        io::write_landscape(buf, land, gen.tables);
        emit(gen.out, buf.str());
    });

    // sample
    struct {
        std::string landscape;
        std::string kind = "enum";
        size_t max_sample = 0;
        uint64_t seed = 1;
        std::string out;
    } smp;
    auto* smp_cmd = app.add_subcommand("sample", "draw a sample from a stored landscape");
    smp_cmd->add_option("--landscape", smp.landscape, "landscape file")->required();
    smp_cmd->add_option("--sample", smp.kind, "enum | rand | awl")
        ->check(CLI::IsMember({"enum", "rand", "awl"}));
    smp_cmd->add_option("--max-sample", smp.max_sample, "sample size cap for rand/awl");
    smp_cmd->add_option("--seed", smp.seed, "run seed (sampler stream is derived from it)");
    smp_cmd->add_option("--out", smp.out, "output file (default stdout)");
    smp_cmd->callback([&smp] {
        auto in = open_input(smp.landscape);
        const NkLandscape land = io::read_landscape(in);
        pipeline::RunConfig cfg;
        cfg.sample_kind = smp.kind;
        cfg.max_sample = smp.max_sample;
        Rng rng = Rng(smp.seed).derive(1);
        sampler::WlRun wl;
        const Sample sample = pipeline::make_sample(land, cfg, rng, &wl);
        std::ostringstream buf;
        io::write_sample(buf, sample);
        emit(smp.out, buf.str());
        if (smp.kind == "awl" && !smp.out.empty()) {
            std::ostringstream meta;
            io::write_wl_meta(meta, wl, smp.max_sample);
            io::write_file_atomic(smp.out + ".meta", meta.str());
        }
    });

    // bliss
    struct {
        std::string in;
        std::string mode = "standard";
        std::string pattern;
        std::string pattern_source = "good";
        size_t windows = 2, patterns = 1;
        bool presort = true;
        uint64_t seed = 1;
        std::string out;
    } bls;
    auto* bls_cmd =
        app.add_subcommand("bliss", "approximate nearest fitter neighbor sets by clustering");
    bls_cmd->add_option("--in", bls.in, "sample file")->required();
    bls_cmd->add_option("--mode", bls.mode, "standard | all-pairs | singleton")
        ->check(CLI::IsMember({"standard", "all-pairs", "singleton"}));
    bls_cmd->add_option("--pattern", bls.pattern, "explicit window digits, e.g. 1100");
    bls_cmd->add_option("--pattern-source", bls.pattern_source, "good | random")
        ->check(CLI::IsMember({"good", "random"}));
    bls_cmd->add_option("--windows", bls.windows, "windows per pattern");
    bls_cmd->add_option("--patterns", bls.patterns, "patterns to combine");
    bls_cmd->add_flag("--presort-fitness,!--no-presort-fitness", bls.presort,
                      "sort the sample by fitness before clustering");
    bls_cmd->add_option("--seed", bls.seed, "run seed (pattern stream is derived from it)");
    bls_cmd->add_option("--out", bls.out, "V-set output file (default stdout)");
    bls_cmd->callback([&bls] {
        auto in = open_input(bls.in);
        const Sample sample = io::read_sample(in);
        VSets v;
        if (bls.mode == "standard") {
            pipeline::RunConfig cfg;
            cfg.windows = bls.windows;
            cfg.patterns = bls.patterns;
            cfg.pattern_source = bls.pattern_source;
            cfg.pattern_digits = bls.pattern;
            cfg.presort_fitness = bls.presort;
            Rng rng = Rng(bls.seed).derive(2);
            v = pipeline::approximate_vsets(sample, cfg, rng);
        } else {
            bliss::Options opts;
            opts.mode = bls.mode == "all-pairs" ? bliss::Mode::AllPairs
                                                : bliss::Mode::SingletonClusters;
            opts.presort_by_fitness = bls.presort;
            v = bliss::bliss_run(sample, Pattern::blocks(sample.length(), 1), opts).vsets;
        }
        std::ostringstream buf;
        io::write_vsets(buf, v);
        emit(bls.out, buf.str());
    });

    // walks
    struct {
        std::string vsets;
        uint64_t seed = 1;
        std::string out;
        std::string plops_out;
    } wlk;
    auto* wlk_cmd = app.add_subcommand("walks", "run adaptive walks over stored V sets");
    wlk_cmd->add_option("--vsets", wlk.vsets, "V-set file")->required();
    wlk_cmd->add_option("--seed", wlk.seed, "run seed (walk stream is derived from it)");
    wlk_cmd->add_option("--out", wlk.out, "walk output file (default stdout)");
    wlk_cmd->add_option("--plops-out", wlk.plops_out, "also write detected peak sids here");
    wlk_cmd->callback([&wlk] {
        auto in = open_input(wlk.vsets);
        const VSets v = io::read_vsets(in);
        const auto ws = walks::all_walks(v, Rng(wlk.seed).derive(3));
        std::ostringstream buf;
        io::write_walks(buf, ws);
        emit(wlk.out, buf.str());
        if (!wlk.plops_out.empty()) {
            std::ostringstream sids;
            io::write_sids(sids, walks::detect_plops(v).sids);
            io::write_file_atomic(wlk.plops_out, sids.str());
        }
    });

    // stats
    struct {
        std::vector<std::string> inputs;
        std::string problem = "problem";
        std::string sample_kind = "external";
        std::string out;
    } sts;
    auto* sts_cmd =
        app.add_subcommand("stats", "aggregate step statistics over stored walk files");
    sts_cmd->add_option("--in", sts.inputs, "walk files, one instance each")->required();
    sts_cmd->add_option("--problem", sts.problem, "problem label for the table");
    sts_cmd->add_option("--sample-kind", sts.sample_kind, "sample label for the table");
    sts_cmd->add_option("--out", sts.out, "CSV output file (default stdout)");
    sts_cmd->callback([&sts] {
        std::vector<stats::InstanceStats> instances;
        for (const auto& path : sts.inputs) {
            auto in = open_input(path);
            const auto ws = io::read_walks(in);
            stats::InstanceStats ist;
            for (const auto& w : ws) ist.walks.push_back(stats::step_stats(w.steps));
            instances.push_back(std::move(ist));
        }
        const auto agg = stats::aggregate(instances);
        std::vector<io::StatsRow> rows = {
            {sts.problem, sts.sample_kind, "cr1", agg.cr1, agg.cr1_ci},
            {sts.problem, sts.sample_kind, "cr2", agg.cr2, agg.cr2_ci},
            {sts.problem, sts.sample_kind, "avg_step", agg.avg_step, agg.avg_step_ci},
            {sts.problem, sts.sample_kind, "adaptlen", agg.adaptlen, agg.adaptlen_ci},
            {sts.problem, sts.sample_kind, "variation", agg.variation, agg.variation_ci},
            {sts.problem, sts.sample_kind, "range", agg.range, agg.range_ci},
            {sts.problem, sts.sample_kind, "wlen", agg.wlen, agg.wlen_ci},
        };
        std::ostringstream buf;
        io::write_stats_csv(buf, rows);
        emit(sts.out, buf.str());
    });

    // pleftest
    struct {
        std::string landscape;
        std::string in;
        std::string vsets;
    } plt;
    auto* plt_cmd = app.add_subcommand(
        "pleftest", "compare detected peaks against exact local optima of the landscape");
    plt_cmd->add_option("--landscape", plt.landscape, "landscape file")->required();
    plt_cmd->add_option("--in", plt.in, "sample file")->required();
    plt_cmd->add_option("--vsets", plt.vsets, "V-set file for the same sample")->required();
    plt_cmd->callback([&plt] {
        auto lin = open_input(plt.landscape);
        const NkLandscape land = io::read_landscape(lin);
        auto sin = open_input(plt.in);
        const Sample sample = io::read_sample(sin);
        auto vin = open_input(plt.vsets);
        const VSets v = io::read_vsets(vin);
        if (land.length() != sample.length()) {
            throw std::invalid_argument("landscape and sample lengths differ");
        }
        if (v.size() != sample.size()) {
            throw std::invalid_argument("V sets do not match the sample");
        }
        std::vector<uint32_t> optima;
        for (uint32_t sid = 0; sid < sample.size(); ++sid) {
            if (walks::plef(land, sample.get(sid)) == 1.0) optima.push_back(sid);
        }
        const auto plops = walks::detect_plops(v).sids;
        std::cout << "full_optima=" << optima.size() << "\n";
        std::cout << "plops=" << plops.size() << "\n";
        if (optima.empty() && plops.empty()) {
            std::cout << "jaccard=n/a\n";
        } else {
            std::cout << "jaccard=" << walks::overlap(optima, plops) << "\n";
        }
    });

    // bench
    struct {
        pipeline::RunConfig cfg;
        size_t k = 4;
    } bch;
    bch.cfg.instances = 5;
    bch.cfg.max_sample = size_t{1} << 14;
    auto* bch_cmd = app.add_subcommand(
        "bench", "time the clustering approximation against the exact pair scan");
    bch_cmd->add_option("--n", bch.cfg.n, "string length");
    bch_cmd->add_option("--k", bch.k, "interacting positions per locus");
    bch_cmd->add_option("--seed", bch.cfg.seed, "base seed; repetition r uses seed+r");
    bch_cmd->add_option("--instances", bch.cfg.instances, "repetitions");
    bch_cmd->add_option("--max-sample", bch.cfg.max_sample, "sample size");
    bch_cmd->add_flag("--presort-fitness,!--no-presort-fitness", bch.cfg.presort_fitness,
                      "sort the sample by fitness before clustering");
    bch_cmd->add_option("--out", bch.cfg.out_dir, "directory for bench.csv (default none)");
    bch_cmd->callback([&bch] {
        bch.cfg.ks = {bch.k};
        pipeline::cmd_bench(bch.cfg, std::cout);
    });

    // pipeline
    struct {
        pipeline::RunConfig cfg;
        std::vector<size_t> ks;
        std::string config_path;
    } pl;
    auto* pl_cmd = app.add_subcommand(
        "pipeline", "landscape, sample, V sets, walks, and statistics per instance");
    pl_cmd->add_option("--config", pl.config_path,
                       "stored key-value config; replaces all other flags");
    pl_cmd->add_option("--n", pl.cfg.n, "string length");
    pl_cmd->add_option("--k", pl.ks, "k values, one problem per value");
    pl_cmd->add_option("--seed", pl.cfg.seed, "base seed; instance i uses seed+i");
    pl_cmd->add_option("--instances", pl.cfg.instances, "instances per problem");
    pl_cmd->add_option("--sample", pl.cfg.sample_kind, "enum | rand | awl")
        ->check(CLI::IsMember({"enum", "rand", "awl"}));
    pl_cmd->add_option("--max-sample", pl.cfg.max_sample, "sample size cap for rand/awl");
    pl_cmd->add_option("--windows", pl.cfg.windows, "windows per pattern");
    pl_cmd->add_option("--patterns", pl.cfg.patterns, "patterns to combine per instance");
    pl_cmd->add_option("--pattern-source", pl.cfg.pattern_source, "good | random")
        ->check(CLI::IsMember({"good", "random"}));
    pl_cmd->add_option("--pattern", pl.cfg.pattern_digits, "explicit window digits");
    pl_cmd->add_flag("--presort-fitness,!--no-presort-fitness", pl.cfg.presort_fitness,
                     "sort samples by fitness before clustering");
    pl_cmd->add_option("--out", pl.cfg.out_dir, "directory for per-instance files");
    pl_cmd->add_option("--workers", pl.cfg.workers, "parallel instances (0 = all cores)");
    pl_cmd->callback([&pl] {
        pipeline::RunConfig cfg;
        if (!pl.config_path.empty()) {
            auto in = open_input(pl.config_path);
            cfg = pipeline::read_config(in);
        } else {
            cfg = pl.cfg;
            if (!pl.ks.empty()) cfg.ks = pl.ks;
        }
        pipeline::cmd_pipeline(cfg, std::cout);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bwalk::ResourceError& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
