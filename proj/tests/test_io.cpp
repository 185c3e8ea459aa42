#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "bwalk/io.hpp"

using namespace bwalk;

namespace {

Sample demo_sample() {
    const char* strings[] = {"0101", "0011", "1010", "1101", "1011", "1000"};
    Sample s(4);
    for (size_t i = 0; i < 6; ++i) s.add(BitString::from_string(strings[i]), double(i));
    return s;
}

VSets demo_ideal() {
    VSets v(6);
    v.offer(0, 3, 1);
    v.offer(1, 4, 1);
    v.offer(2, 4, 1);
    v.offer(2, 5, 1);
    v.offer(3, 4, 2);
    v.offer(3, 5, 2);
    v.offer(4, 5, 2);
    v.normalize();
    return v;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("samples round-trip through their text form") {
    const Sample s = demo_sample();
    std::stringstream buf;
    io::write_sample(buf, s);
    CHECK(buf.str().rfind("N=4\n0101,0\n0011,1\n", 0) == 0);
    const Sample back = io::read_sample(buf);
    REQUIRE(back.size() == s.size());
    CHECK(back.length() == 4);
    CHECK(back.origin() == Origin::External);
    for (uint32_t sid = 0; sid < s.size(); ++sid) {
        CHECK(back.get(sid) == s.get(sid));
        CHECK(back.fitness(sid) == s.fitness(sid));
    }
}

TEST_CASE("malformed sample files are rejected") {
    std::stringstream no_header("0101,1\n");
    CHECK_THROWS_AS((void)io::read_sample(no_header), std::invalid_argument);
    std::stringstream bad_fitness("N=4\n0101,x\n");
    CHECK_THROWS_AS((void)io::read_sample(bad_fitness), std::invalid_argument);
    std::stringstream no_comma("N=4\n0101\n");
    CHECK_THROWS_AS((void)io::read_sample(no_comma), std::invalid_argument);
    std::stringstream wrong_len("N=4\n01011,1\n");
    CHECK_THROWS_AS((void)io::read_sample(wrong_len), std::invalid_argument);
}

TEST_CASE("seeded landscapes serialize as their recipe") {
    const NkLandscape f(10, 3, 42);
    std::stringstream buf;
    io::write_landscape(buf, f);
    CHECK(buf.str() == "NK 10 3 42\n");
    const NkLandscape back = io::read_landscape(buf);
    CHECK(back.length() == 10);
    CHECK(back.k() == 3);
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        const BitString s = BitString::random(10, rng);
        CHECK(back.evaluate(s) == f.evaluate(s));
    }
}

TEST_CASE("explicit tables reproduce every fitness value exactly") {
    const NkLandscape f(6, 2, 7);
    std::stringstream buf;
    io::write_landscape(buf, f, true);
    CHECK(buf.str().rfind("NKTABLES 6 2\n", 0) == 0);
    const NkLandscape back = io::read_landscape(buf);
    CHECK(back.neighbors() == f.neighbors());
    CHECK(back.tables() == f.tables());
    for (uint64_t v = 0; v < 64; ++v) {
        const BitString s = BitString::from_value(v, 6);
        CHECK(back.evaluate(s) == f.evaluate(s));
    }
}

TEST_CASE("malformed landscape files are rejected") {
    std::stringstream empty("");
    CHECK_THROWS_AS((void)io::read_landscape(empty), std::invalid_argument);
    std::stringstream unknown("FOO 4 2\n");
    CHECK_THROWS_AS((void)io::read_landscape(unknown), std::invalid_argument);
    std::stringstream truncated("NK 10 3\n");
    CHECK_THROWS_AS((void)io::read_landscape(truncated), std::invalid_argument);
    std::stringstream bad_row("NKTABLES 2 0\nX 0\n");
    CHECK_THROWS_AS((void)io::read_landscape(bad_row), std::invalid_argument);
}

TEST_CASE("V sets round-trip with empty rows for the fittest") {
    const VSets v = demo_ideal();
    std::stringstream buf;
    io::write_vsets(buf, v);
    CHECK(buf.str() == "0,1,3\n1,1,4\n2,1,4;5\n3,2,4;5\n4,2,5\n5,,\n");
    CHECK(io::read_vsets(buf) == v);
}

TEST_CASE("malformed V-set files are rejected") {
    std::stringstream half_empty("0,1,\n");
    CHECK_THROWS_AS((void)io::read_vsets(half_empty), std::invalid_argument);
    std::stringstream other_half("0,,3\n");
    CHECK_THROWS_AS((void)io::read_vsets(other_half), std::invalid_argument);
    std::stringstream empty("");
    CHECK_THROWS_AS((void)io::read_vsets(empty), std::invalid_argument);
    std::stringstream bad_sid("x,1,2\n");
    CHECK_THROWS_AS((void)io::read_vsets(bad_sid), std::invalid_argument);
}

TEST_CASE("walks round-trip node chains and step sizes") {
    std::vector<walks::Walk> ws(2);
    ws[0].nodes = {0, 3, 5};
    ws[0].steps = {1, 2};
    ws[1].nodes = {4, 5};
    ws[1].steps = {2};
    std::stringstream buf;
    io::write_walks(buf, ws);
    CHECK(buf.str() == "0:0>3>5;steps=1,2\n4:4>5;steps=2\n");
    const auto back = io::read_walks(buf);
    REQUIRE(back.size() == 2);
    CHECK(back[0].nodes == ws[0].nodes);
    CHECK(back[0].steps == ws[0].steps);
    CHECK(back[1].nodes == ws[1].nodes);
    CHECK(back[1].steps == ws[1].steps);
}

TEST_CASE("inconsistent walk lines are rejected") {
    std::stringstream wrong_start("0:1>2;steps=1\n");
    CHECK_THROWS_AS((void)io::read_walks(wrong_start), std::invalid_argument);
    std::stringstream wrong_count("0:0>2;steps=1,2\n");
    CHECK_THROWS_AS((void)io::read_walks(wrong_count), std::invalid_argument);
    std::stringstream nonsense("nonsense\n");
    CHECK_THROWS_AS((void)io::read_walks(nonsense), std::invalid_argument);
}

TEST_CASE("sid lists skip blank lines") {
    std::stringstream buf;
    io::write_sids(buf, {3, 4});
    CHECK(buf.str() == "3\n4\n");
    std::stringstream gappy("3\n\n4\n");
    CHECK(io::read_sids(gappy) == std::vector<uint32_t>{3, 4});
}

TEST_CASE("sampler metadata lists the run's key numbers") {
    sampler::WlRun run;
    run.evaluations = 5;
    run.final_ln_f = 0.25;
    run.seed = 9;
    std::stringstream buf;
    io::write_wl_meta(buf, run, 128);
    CHECK(buf.str() == "evaluations=5\nfinal_ln_f=0.25\nseed=9\nmax_sample=128\n");
}

TEST_CASE("stats tables carry a fixed header") {
    std::stringstream buf;
    io::write_stats_csv(buf, {{"NK(16,8)", "enum", "cr1", 0.5, 0.01}});
    CHECK(buf.str() == "problem,sample,statistic,mean,ci95\nNK(16,8),enum,cr1,0.5,0.01\n");
}

TEST_CASE("atomic writes land complete and leave no temp file") {
    namespace fs = std::filesystem;
    const std::string path = (fs::temp_directory_path() / "bwalk_io_test.txt").string();
    io::write_file_atomic(path, "alpha\nbeta\n");
    CHECK(io::slurp_file(path) == "alpha\nbeta\n");
    CHECK(!fs::exists(path + ".tmp"));
    io::write_file_atomic(path, "gamma");
    CHECK(io::slurp_file(path) == "gamma");
    std::remove(path.c_str());
    CHECK_THROWS_AS((void)io::slurp_file(path), std::invalid_argument);
}

} // TEST_SUITE
