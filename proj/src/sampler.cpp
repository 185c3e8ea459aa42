#include "bwalk/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "bwalk/errors.hpp"

namespace bwalk::sampler {

Sample enum_sample(const FitnessFunction& f, size_t max_points) {
    const size_t n = f.length();
    if (n >= 64 || (size_t{1} << n) > max_points) {
        const double gib = n >= 64 ? 1e18 : std::ldexp(16.0, static_cast<int>(n)) / (1 << 30);
        throw bwalk::ResourceError(
            "enumerating 2^" + std::to_string(n) + " strings (about " + std::to_string(gib) +
            " GiB of sample) exceeds the budget of " + std::to_string(max_points) + " points");
    }
    const size_t total = size_t{1} << n;
    Sample out(n, Origin::Enum);
    for (size_t v = 0; v < total; ++v) {
        BitString s = BitString::from_value(v, n);
        out.add(s, f.evaluate(s));
    }
    return out;
}

Sample rand_sample(const FitnessFunction& f, size_t count, Rng& rng) {
    const size_t n = f.length();
    Sample out(n, Origin::Rand);
    if (n <= 63) {
        const uint64_t space = uint64_t{1} << n;
        if (count > space) {
            throw std::invalid_argument("sample size exceeds the 2^" + std::to_string(n) +
                                        "-string search space");
        }
        // Floyd's algorithm: `count` distinct values uniform over [0, space).
        std::unordered_set<uint64_t> chosen;
        chosen.reserve(count * 2);
        for (uint64_t j = space - count; j < space; ++j) {
            const uint64_t t = rng.next_below(j + 1);
            const uint64_t pick = chosen.insert(t).second ? t : (chosen.insert(j), j);
            BitString s = BitString::from_value(pick, n);
            out.add(s, f.evaluate(s));
        }
    } else {
        std::unordered_set<BitString, BitStringHash> chosen;
        chosen.reserve(count * 2);
        while (chosen.size() < count) {
            BitString s = BitString::random(n, rng);
            if (chosen.insert(s).second) out.add(s, f.evaluate(s));
        }
    }
    return out;
}

WlRun wang_landau(const FitnessFunction& f, const WlConfig& cfg, Rng& rng) {
    const size_t n = f.length();
    const double lo = f.range_min();
    const double hi = f.range_max();
    if (!(hi > lo)) throw std::invalid_argument("declared fitness range is empty");
    if (!(cfg.bin_width > 0)) throw std::invalid_argument("bin width must be positive");
    const double bins_exact = (hi - lo) / cfg.bin_width;
    const auto nbins = static_cast<size_t>(std::llround(bins_exact));
    if (nbins < 1 || std::abs(bins_exact - static_cast<double>(nbins)) > 1e-6) {
        throw std::invalid_argument("bin width must divide the fitness range evenly");
    }
    if (!cfg.bin_mask.empty() && cfg.bin_mask.size() != nbins) {
        throw std::invalid_argument("bin mask must cover every bin");
    }
    if (!(cfg.flatness > 0.0 && cfg.flatness <= 1.0)) {
        throw std::invalid_argument("flatness must lie in (0, 1]");
    }
    if (!(cfg.ln_f_epsilon > 0.0) && cfg.max_sample == 0 && cfg.max_evaluations == 0) {
        throw std::invalid_argument("no termination condition: set ln_f_epsilon, max_sample, "
                                    "or max_evaluations");
    }

    const auto bin_of = [&](double x) {
        auto b = static_cast<long>(std::floor((x - lo) / cfg.bin_width));
        if (b < 0) b = 0;
        if (b >= static_cast<long>(nbins)) b = static_cast<long>(nbins) - 1;
        return static_cast<size_t>(b);
    };

    std::vector<double> ln_g(nbins, 0.0);
    std::vector<uint64_t> hist(nbins, 0);
    double ln_f = cfg.ln_f_init;

    WlRun run;
    run.seed = rng.seed();
    run.sample = Sample(n, Origin::Awl);

    std::unordered_set<BitString, BitStringHash> seen;
    BitString cur = BitString::random(n, rng);
    double cur_fit = f.evaluate(cur);
    size_t cur_bin = bin_of(cur_fit);
    run.evaluations = 1;

    const auto visit = [&]() {
        ln_g[cur_bin] += ln_f;
        ++hist[cur_bin];
        if (seen.insert(cur).second) run.sample.add(cur, cur_fit);
    };
    visit();

    size_t since_check = 0;
    while (true) {
        if (cfg.max_sample != 0 && run.sample.size() >= cfg.max_sample) break;
        if (ln_f < cfg.ln_f_epsilon) break;
        if (cfg.max_evaluations != 0 && run.evaluations >= cfg.max_evaluations) break;

        const size_t pos = rng.next_below(n);
        BitString cand = cur.flipped(pos);
        const double cand_fit = f.evaluate(cand);
        ++run.evaluations;
        const size_t cand_bin = bin_of(cand_fit);
        const double diff = ln_g[cur_bin] - ln_g[cand_bin];
        if (diff >= 0.0 || rng.next_double() < std::exp(diff)) {
            cur = std::move(cand);
            cur_fit = cand_fit;
            cur_bin = cand_bin;
        }
        visit();

        if (++since_check >= cfg.check_interval) {
            since_check = 0;
            uint64_t total = 0;
            uint64_t min_count = UINT64_MAX;
            size_t counted = 0;
            for (size_t b = 0; b < nbins; ++b) {
                if (!cfg.bin_mask.empty() && !cfg.bin_mask[b]) continue;
                total += hist[b];
                min_count = std::min(min_count, hist[b]);
                ++counted;
            }
            if (counted > 0 && total > 0) {
                const double mean = static_cast<double>(total) / static_cast<double>(counted);
                if (static_cast<double>(min_count) >= cfg.flatness * mean) {
                    std::fill(hist.begin(), hist.end(), 0);
                    ln_f *= 0.5;
                }
            }
        }
    }
    run.final_ln_f = ln_f;
    return run;
}

} // namespace bwalk::sampler
