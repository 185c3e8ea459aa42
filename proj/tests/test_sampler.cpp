#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"

#include "bwalk/errors.hpp"
#include "bwalk/fitness.hpp"
#include "bwalk/sampler.hpp"

using namespace bwalk;

TEST_SUITE("sampler") {

TEST_CASE("enumeration lists every string in lexicographic order") {
    const NkLandscape f(4, 1, 8);
    const Sample s = sampler::enum_sample(f);
    REQUIRE(s.size() == 16);
    CHECK(s.origin() == Origin::Enum);
    for (size_t sid = 0; sid < 16; ++sid) {
        CHECK(s.get(sid).value() == sid);
        CHECK(s.fitness(sid) == f.evaluate(s.get(sid)));
    }
}

TEST_CASE("enumeration refuses budgets it cannot meet") {
    const NkLandscape big(30, 2, 1);
    CHECK_THROWS_AS((void)sampler::enum_sample(big), ResourceError);
    const NkLandscape small(10, 2, 1);
    CHECK_THROWS_AS((void)sampler::enum_sample(small, 512), ResourceError);
    try {
        (void)sampler::enum_sample(big);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("GiB") != std::string::npos);
    }
}

TEST_CASE("random samples are distinct, sized, and seed-deterministic") {
    const NkLandscape f(12, 3, 5);
    Rng r1(77), r2(77);
    const Sample a = sampler::rand_sample(f, 500, r1);
    const Sample b = sampler::rand_sample(f, 500, r2);
    REQUIRE(a.size() == 500);
    CHECK(a.origin() == Origin::Rand);
    std::set<uint64_t> values;
    for (size_t sid = 0; sid < a.size(); ++sid) {
        values.insert(a.get(sid).value());
        CHECK(a.get(sid) == b.get(sid));
    }
    CHECK(values.size() == 500); // all distinct
}

TEST_CASE("a full-space request covers the space exactly once") {
    const NkLandscape f(6, 2, 9);
    Rng rng(3);
    const Sample s = sampler::rand_sample(f, 64, rng);
    std::set<uint64_t> values;
    for (size_t sid = 0; sid < s.size(); ++sid) values.insert(s.get(sid).value());
    CHECK(values.size() == 64);
    CHECK_THROWS_AS((void)sampler::rand_sample(f, 65, rng), std::invalid_argument);
}

TEST_CASE("long strings use the collision-checked path") {
    const ConstantFitness f(70, 0.5);
    Rng rng(11);
    const Sample s = sampler::rand_sample(f, 100, rng);
    REQUIRE(s.size() == 100);
    std::set<std::string> seen;
    for (size_t sid = 0; sid < s.size(); ++sid) seen.insert(s.get(sid).to_string());
    CHECK(seen.size() == 100);
}

TEST_CASE("flat-histogram run on a one-bin landscape halves ln f per stage") {
    // Constant fitness collapses the histogram to one always-flat bin, so
    // ln f halves at every check until it crosses the epsilon threshold.
    const ConstantFitness f(8, 2.5);
    sampler::WlConfig cfg;
    Rng rng(99);
    const sampler::WlRun run = sampler::wang_landau(f, cfg, rng);
    CHECK(run.evaluations == 30001); // 1 start + 30 stages x 1000 proposals
    CHECK(run.final_ln_f < cfg.ln_f_epsilon);
    CHECK(run.final_ln_f > cfg.ln_f_epsilon / 4);
    CHECK(run.sample.origin() == Origin::Awl);
    CHECK(run.sample.size() <= 256);
}

TEST_CASE("sample cap stops the walk at the requested size") {
    const NkLandscape f(12, 4, 21);
    sampler::WlConfig cfg;
    cfg.max_sample = 300;
    Rng rng(5);
    const sampler::WlRun run = sampler::wang_landau(f, cfg, rng);
    CHECK(run.sample.size() == 300);
    CHECK(run.evaluations >= 300);
}

TEST_CASE("evaluation cap is a hard stop") {
    const NkLandscape f(12, 4, 21);
    sampler::WlConfig cfg;
    cfg.max_evaluations = 2000;
    Rng rng(5);
    const sampler::WlRun run = sampler::wang_landau(f, cfg, rng);
    CHECK(run.evaluations == 2000);
}

TEST_CASE("visited strings are distinct and start with the seed point") {
    const NkLandscape f(10, 3, 33);
    sampler::WlConfig cfg;
    cfg.max_sample = 200;
    Rng r1(123), r2(123);
    const sampler::WlRun a = sampler::wang_landau(f, cfg, r1);
    const sampler::WlRun b = sampler::wang_landau(f, cfg, r2);
    REQUIRE(a.sample.size() == b.sample.size());
    std::set<uint64_t> seen;
    for (size_t sid = 0; sid < a.sample.size(); ++sid) {
        CHECK(a.sample.get(sid) == b.sample.get(sid)); // deterministic
        seen.insert(a.sample.get(sid).value());
    }
    CHECK(seen.size() == a.sample.size());
    Rng r3(123);
    CHECK(a.sample.get(0) == BitString::random(10, r3)); // first visit is the start
}

TEST_CASE("bad configurations are rejected up front") {
    const NkLandscape f(8, 2, 1);
    Rng rng(1);
    sampler::WlConfig cfg;

    cfg.bin_width = 0.0;
    CHECK_THROWS_AS((void)sampler::wang_landau(f, cfg, rng), std::invalid_argument);

    cfg = {};
    cfg.bin_width = 0.3; // does not divide [0,1)
    CHECK_THROWS_AS((void)sampler::wang_landau(f, cfg, rng), std::invalid_argument);

    cfg = {};
    cfg.flatness = 1.5;
    CHECK_THROWS_AS((void)sampler::wang_landau(f, cfg, rng), std::invalid_argument);

    cfg = {};
    cfg.bin_mask = {1, 0, 1}; // 10 bins, mask of 3
    CHECK_THROWS_AS((void)sampler::wang_landau(f, cfg, rng), std::invalid_argument);

    cfg = {};
    cfg.ln_f_epsilon = 0.0; // nothing would ever stop the walk
    CHECK_THROWS_AS((void)sampler::wang_landau(f, cfg, rng), std::invalid_argument);
}

TEST_CASE("masked-out bins cannot block flatness") {
    // Constant fitness over a wide range visits exactly one bin. Unmasked,
    // the nine untouched bins keep the histogram from ever looking flat;
    // masking them out lets every stage complete.
    const ConstantFitness f(8, 0.25, 0.0, 1.0);
    sampler::WlConfig cfg;
    cfg.max_evaluations = 50000;
    Rng r1(17);
    const sampler::WlRun stuck = sampler::wang_landau(f, cfg, r1);
    CHECK(stuck.evaluations == 50000); // never flat, ran to the cap

    cfg.bin_mask = {0, 0, 1, 0, 0, 0, 0, 0, 0, 0};
    Rng r2(17);
    const sampler::WlRun run = sampler::wang_landau(f, cfg, r2);
    CHECK(run.final_ln_f < cfg.ln_f_epsilon);
    CHECK(run.evaluations == 30001);
}

} // TEST_SUITE
