#include <algorithm>
#include <stdexcept>

#include "doctest.h"

#include "bwalk/bliss.hpp"
#include "bwalk/oracle.hpp"
#include "bwalk/rng.hpp"
#include "bwalk/sample.hpp"
#include "bwalk/sampler.hpp"

using namespace bwalk;

namespace {

Sample demo_sample() {
    const char* strings[] = {"0101", "0011", "1010", "1101", "1011", "1000"};
    Sample s(4);
    for (size_t i = 0; i < 6; ++i) s.add(BitString::from_string(strings[i]), double(i));
    return s;
}

// Independent quadratic reference, written differently from the library's
// scan on purpose.
VSets naive_reference(const Sample& s) {
    VSets v(s.size());
    for (size_t a = 0; a < s.size(); ++a) {
        uint32_t best = 0;
        bool found = false;
        for (size_t b = 0; b < s.size(); ++b) {
            if (s.fitness(b) <= s.fitness(a)) continue;
            const uint32_t hd = uint32_t(hamming(s.get(a), s.get(b)));
            if (!found || hd < best) {
                best = hd;
                found = true;
            }
        }
        if (!found) continue;
        for (size_t b = 0; b < s.size(); ++b) {
            if (s.fitness(b) > s.fitness(a) && hamming(s.get(a), s.get(b)) == best) {
                v.offer(a, uint32_t(b), best);
            }
        }
    }
    v.normalize();
    return v;
}

// Distinct strings with real-valued fitness; count must stay within 2^n.
Sample random_sample(size_t n, size_t count, Rng& rng) {
    const NkLandscape f(n, std::min<size_t>(3, n - 1), rng.next_u64());
    return sampler::rand_sample(f, count, rng);
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("exact scan on the demo finds the ideal sets") {
    const VSets v = oracle::all_pairs_neighbor_sets(demo_sample());
    CHECK(v.min_hd == std::vector<uint32_t>{1, 1, 1, 2, 2, 0});
    CHECK(v.members[2] == std::vector<uint32_t>{4, 5});
    CHECK(v.members[3] == std::vector<uint32_t>{4, 5});
    CHECK(v.members[5].empty());
}

TEST_CASE("exact scan matches an independent reference on random samples") {
    Rng rng(2024);
    for (int rep = 0; rep < 25; ++rep) {
        const size_t n = 4 + rng.next_below(12);
        const size_t cap = std::min<size_t>(60, (size_t{1} << n) - 2);
        const size_t count = 2 + rng.next_below(cap);
        const Sample s = random_sample(n, count, rng);
        CHECK(oracle::all_pairs_neighbor_sets(s) == naive_reference(s));
    }
}

TEST_CASE("degenerate single-cluster run equals the exact scan") {
    Rng rng(31);
    bliss::Options ap;
    ap.mode = bliss::Mode::AllPairs;
    for (int rep = 0; rep < 10; ++rep) {
        const size_t n = 6 + rng.next_below(10);
        const size_t cap = std::min<size_t>(120, (size_t{1} << n) - 3);
        const Sample s = random_sample(n, 3 + rng.next_below(cap), rng);
        const auto run = bliss::bliss_run(s, Pattern::blocks(n, 1), ap);
        CHECK(run.vsets == oracle::all_pairs_neighbor_sets(s));
    }
}

TEST_CASE("equal-fitness strings never pair") {
    Sample s(4);
    s.add(BitString::from_string("0000"), 1.0);
    s.add(BitString::from_string("0001"), 1.0);
    s.add(BitString::from_string("0011"), 2.0);
    const VSets v = oracle::all_pairs_neighbor_sets(s);
    CHECK(v.members[0] == std::vector<uint32_t>{2});
    CHECK(v.min_hd[0] == 2);
    CHECK(v.members[1] == std::vector<uint32_t>{2});
    CHECK(v.members[2].empty());
}

TEST_CASE("tiny samples are rejected") {
    Sample s(4);
    s.add(BitString::from_string("0000"), 1.0);
    CHECK_THROWS_AS((void)oracle::all_pairs_neighbor_sets(s), std::invalid_argument);
}

TEST_CASE("timed scan reports the full pair count") {
    const auto timed = oracle::all_pairs_timing(demo_sample());
    CHECK(timed.pair_count == 15);
    CHECK(timed.seconds >= 0.0);
    CHECK(timed.vsets == oracle::all_pairs_neighbor_sets(demo_sample()));
}

} // TEST_SUITE
