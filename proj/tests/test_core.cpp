#include <set>
#include <stdexcept>

#include "doctest.h"

#include "bwalk/bitstring.hpp"
#include "bwalk/errors.hpp"
#include "bwalk/fitness.hpp"
#include "bwalk/pattern.hpp"
#include "bwalk/rng.hpp"
#include "bwalk/sample.hpp"
#include "bwalk/vsets.hpp"

using namespace bwalk;

namespace {

// Six strings, fitness equal to sid.
Sample demo_sample() {
    const char* strings[] = {"0101", "0011", "1010", "1101", "1011", "1000"};
    Sample s(4);
    for (size_t i = 0; i < 6; ++i) s.add(BitString::from_string(strings[i]), double(i));
    return s;
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("rng streams are deterministic per seed") {
    Rng a(42), b(42);
    for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
    CHECK(Rng(42).next_u64() != Rng(43).next_u64());
}

TEST_CASE("rng doubles stay in the unit interval") {
    Rng r(9);
    for (int i = 0; i < 1000; ++i) {
        const double x = r.next_double();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("next_below is bounded and hits every residue") {
    Rng r(7);
    bool seen[5] = {};
    for (int i = 0; i < 500; ++i) {
        const uint64_t v = r.next_below(5);
        REQUIRE(v < 5);
        seen[v] = true;
    }
    for (bool s : seen) CHECK(s);
}

TEST_CASE("derived streams are decorrelated and order-independent") {
    const Rng parent(1234);
    Rng c2 = parent.derive(2);
    Rng c1 = parent.derive(1); // deriving 2 first must not shift stream 1
    Rng c1_again = parent.derive(1);
    const uint64_t first = c1.next_u64();
    CHECK(first == c1_again.next_u64());
    CHECK(first != c2.next_u64());
}

TEST_CASE("bitstring text, value, and flip behave as one convention") {
    const BitString s = BitString::from_string("1011");
    CHECK(s.to_string() == "1011");
    CHECK(s.value() == 0b1011);
    CHECK(BitString::from_value(0b1011, 4) == s);
    CHECK(s.bit(0)); // leftmost character
    CHECK_FALSE(s.bit(1));

    BitString t = s.flipped(1);
    CHECK(t.to_string() == "1111");
    CHECK(s.to_string() == "1011"); // original untouched
    CHECK_THROWS_AS((void)BitString::from_string("10x1"), std::invalid_argument);
}

TEST_CASE("lexicographic order of from_value matches integer order") {
    std::string prev;
    for (uint64_t v = 0; v < 16; ++v) {
        const std::string cur = BitString::from_value(v, 4).to_string();
        if (v > 0) CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("hamming distance counts differing positions") {
    const BitString a = BitString::from_string("0101");
    const BitString b = BitString::from_string("1101");
    CHECK(hamming(a, b) == 1);
    CHECK(hamming(a, a) == 0);
    CHECK_THROWS_AS((void)hamming(a, BitString::from_string("01")), std::invalid_argument);
}

TEST_CASE("hamming over multi-word strings matches a bit loop") {
    Rng r(5);
    const BitString a = BitString::random(100, r);
    const BitString b = BitString::random(100, r);
    size_t expect = 0;
    for (size_t i = 0; i < 100; ++i) expect += a.bit(i) != b.bit(i);
    CHECK(hamming(a, b) == expect);
}

TEST_CASE("demo pair distances used throughout the worked example") {
    const Sample s = demo_sample();
    CHECK(s.hamming(0, 3) == 1);
    CHECK(s.hamming(1, 4) == 1);
    CHECK(s.hamming(2, 4) == 1);
    CHECK(s.hamming(2, 5) == 1);
    CHECK(s.hamming(3, 5) == 2);
    CHECK(s.hamming(4, 5) == 2);
    CHECK(s.hamming(0, 2) == 4);
    CHECK(s.fittest() == 5);
}

TEST_CASE("identity levels are per-position proportions of ones") {
    const auto lv = identity_level(demo_sample());
    REQUIRE(lv.size() == 4);
    CHECK(lv[0] == doctest::Approx(4.0 / 6.0));
    CHECK(lv[1] == doctest::Approx(2.0 / 6.0));
    CHECK(lv[2] == doctest::Approx(3.0 / 6.0));
    CHECK(lv[3] == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("identity-derived pattern groups similar-level positions") {
    CHECK(good_pattern(demo_sample(), 2).to_digits() == "1001");

    // Uniform levels: ranking falls back to position order.
    Sample flat(4);
    flat.add(BitString::from_string("0000"), 0.0);
    flat.add(BitString::from_string("1111"), 1.0);
    CHECK(good_pattern(flat, 2).to_digits() == "1100");
}

TEST_CASE("digit patterns validate window coverage") {
    const Pattern p = Pattern::from_digits("0110");
    CHECK(p.length() == 4);
    CHECK(p.num_windows() == 2);
    CHECK(p.window_of(0) == 0);
    CHECK(p.window_of(1) == 1);
    CHECK(p.kept_positions(1) == std::vector<uint32_t>{0, 3});
    CHECK(p.to_digits() == "0110");

    CHECK_THROWS_AS((void)Pattern::from_digits(""), std::invalid_argument);
    // Window ids must tile 0..m-1 with every window non-empty.
    CHECK_THROWS_AS((void)Pattern(std::vector<uint32_t>{0, 0, 2, 2}, 3), std::invalid_argument);
}

TEST_CASE("block patterns split evenly and reject non-divisors") {
    CHECK(Pattern::blocks(4, 2).to_digits() == "0011");
    CHECK(Pattern::blocks(4, 1).to_digits() == "0000");
    CHECK_THROWS_AS((void)Pattern::blocks(10, 3), std::invalid_argument);
}

TEST_CASE("random patterns are balanced") {
    Rng r(77);
    for (int rep = 0; rep < 20; ++rep) {
        const Pattern p = random_pattern(12, 3, r);
        size_t count[3] = {};
        for (size_t i = 0; i < 12; ++i) ++count[p.window_of(i)];
        CHECK(count[0] == 4);
        CHECK(count[1] == 4);
        CHECK(count[2] == 4);
    }
    CHECK_THROWS_AS((void)random_pattern(10, 4, r), std::invalid_argument);
}

TEST_CASE("v-set offers keep the minimum distance and accumulate ties") {
    VSets v(3);
    v.offer(0, 2, 3);
    v.offer(0, 1, 2);
    CHECK(v.members[0] == std::vector<uint32_t>{1});
    CHECK(v.min_hd[0] == 2);
    v.offer(0, 2, 2);
    v.offer(0, 1, 2); // duplicate partner
    v.offer(0, 2, 5); // worse, ignored
    v.normalize();
    CHECK(v.members[0] == std::vector<uint32_t>{1, 2});
    CHECK_FALSE(v.has(1));
    CHECK(v.min_hd[1] == 0);
}

TEST_CASE("combining runs keeps the smaller distance and unions ties") {
    VSets a(3), b(3);
    a.offer(0, 1, 2);
    b.offer(0, 2, 1); // closer, wins
    a.offer(1, 2, 3);
    b.offer(1, 1, 3); // tie, union
    const VSets m = combine({a, b});
    CHECK(m.min_hd[0] == 1);
    CHECK(m.members[0] == std::vector<uint32_t>{2});
    CHECK(m.min_hd[1] == 3);
    CHECK(m.members[1] == std::vector<uint32_t>{1, 2});
    CHECK_FALSE(m.has(2));

    CHECK_THROWS_AS((void)combine({}), std::invalid_argument);
    CHECK_THROWS_AS((void)combine({VSets(2), VSets(3)}), std::invalid_argument);
}

TEST_CASE("mean of minimal distances skips empty sets") {
    VSets v(3);
    v.offer(0, 2, 1);
    v.offer(1, 2, 2);
    CHECK(mean_b_min_hd(v) == doctest::Approx(1.5));
    CHECK_THROWS_AS((void)mean_b_min_hd(VSets(2)), std::invalid_argument);
}

TEST_CASE("nk landscapes are deterministic in (n, k, seed)") {
    const NkLandscape a(12, 3, 99);
    const NkLandscape b(12, 3, 99);
    const NkLandscape c(12, 3, 100);
    Rng r(1);
    bool any_diff = false;
    for (int i = 0; i < 32; ++i) {
        const BitString s = BitString::random(12, r);
        CHECK(a.evaluate(s) == b.evaluate(s));
        any_diff |= a.evaluate(s) != c.evaluate(s);
    }
    CHECK(any_diff);
}

TEST_CASE("nk values live inside the declared range") {
    const NkLandscape f(10, 4, 3);
    CHECK(f.range_min() == 0.0);
    CHECK(f.range_max() == 1.0);
    Rng r(2);
    for (int i = 0; i < 200; ++i) {
        const double v = f.evaluate(BitString::random(10, r));
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("nk neighborhoods exclude self and are distinct") {
    const NkLandscape f(16, 6, 5);
    for (size_t i = 0; i < 16; ++i) {
        const auto& nb = f.neighbors()[i];
        REQUIRE(nb.size() == 6);
        std::set<uint32_t> uniq(nb.begin(), nb.end());
        CHECK(uniq.size() == 6);
        CHECK(uniq.count(uint32_t(i)) == 0);
    }
}

TEST_CASE("nk rejects invalid shapes and oversized tables") {
    CHECK_THROWS_AS((void)NkLandscape(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)NkLandscape(8, 8, 1), std::invalid_argument); // k >= n
    CHECK_THROWS_AS((void)NkLandscape(40, 30, 1), ResourceError);      // 2^31 table entries
}

TEST_CASE("explicit nk tables reproduce a hand-computed mean") {
    // n=2, k=1: position 0 watches 1 and vice versa; table idx = own | other<<1.
    std::vector<std::vector<uint32_t>> nb = {{1}, {0}};
    std::vector<std::vector<double>> tb = {{0.0, 0.25, 0.5, 0.75}, {0.1, 0.2, 0.3, 0.4}};
    const NkLandscape f(2, 1, nb, tb);
    // "10": s0=1, s1=0 -> t0[1 | 0<<1] = 0.25; t1[0 | 1<<1] = 0.3.
    CHECK(f.evaluate(BitString::from_string("10")) == doctest::Approx((0.25 + 0.3) / 2));
    CHECK(f.evaluate(BitString::from_string("01")) == doctest::Approx((0.5 + 0.2) / 2));
}

TEST_CASE("table fitness falls back for unknown strings") {
    std::unordered_map<BitString, double, BitStringHash> t;
    t[BitString::from_string("11")] = 5.0;
    const TableFitness f(2, t);
    CHECK(f.evaluate(BitString::from_string("11")) == 5.0);
    CHECK(f.evaluate(BitString::from_string("00")) == -1.0);
}

TEST_CASE("samples reject mixed lengths and evaluate in order") {
    Sample s(3);
    s.add(BitString::from_string("010"), 1.0);
    CHECK_THROWS_AS(s.add(BitString::from_string("0100"), 2.0), std::invalid_argument);

    const ConstantFitness f(3, 0.5);
    const Sample e = evaluate({BitString::from_string("000"), BitString::from_string("111")}, f);
    CHECK(e.size() == 2);
    CHECK(e.get(1).to_string() == "111");
    CHECK(e.fitness(0) == 0.5);
}

TEST_CASE("fitness presort is stable and reports the permutation") {
    Sample s(2);
    s.add(BitString::from_string("00"), 2.0);
    s.add(BitString::from_string("01"), 1.0);
    s.add(BitString::from_string("10"), 2.0);
    std::vector<uint32_t> perm;
    const Sample sorted = sort_by_fitness(s, &perm);
    CHECK(perm == std::vector<uint32_t>{1, 0, 2});
    CHECK(sorted.get(0).to_string() == "01");
    CHECK(sorted.get(1).to_string() == "00");
    CHECK(sorted.get(2).to_string() == "10");
    CHECK(sorted.fitness(0) == 1.0);
}

} // TEST_SUITE
