#include "chaincmp/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <thread>

namespace chaincmp {

std::string_view distribution_name(SourceDistribution dist) {
    switch (dist) {
    case SourceDistribution::Uniform01: return "uniform";
    case SourceDistribution::Exponential1: return "exponential";
    case SourceDistribution::StandardNormal: return "normal";
    case SourceDistribution::Pareto21: return "pareto";
    }
    throw ValidationError("distribution_name: unknown distribution");
}

SourceDistribution parse_distribution(std::string_view name) {
    if (name == "uniform") return SourceDistribution::Uniform01;
    if (name == "exponential") return SourceDistribution::Exponential1;
    if (name == "normal") return SourceDistribution::StandardNormal;
    if (name == "pareto") return SourceDistribution::Pareto21;
    throw ValidationError("unknown distribution '" + std::string(name) +
                          "' (expected uniform, exponential, normal, or pareto)");
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 output function (Steele, Lea, Flood 2014).
std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix(state_);
}

double SplitMix64::next_uniform01() {
    // 53 mantissa bits, shifted to the cell midpoints of (0, 1).
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt) {
    std::uint64_t s = mix(seed + kGolden);
    s = mix(s ^ (kGolden * (trial + 1)));
    s = mix(s ^ (0xBF58476D1CE4E5B9ULL * (attempt + 1)));
    return s;
}

double draw_value(SourceDistribution dist, SplitMix64& gen) {
    switch (dist) {
    case SourceDistribution::Uniform01:
        return gen.next_uniform01();
    case SourceDistribution::Exponential1:
        return -std::log(gen.next_uniform01());
    case SourceDistribution::StandardNormal: {
        const double u1 = gen.next_uniform01();
        const double u2 = gen.next_uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    case SourceDistribution::Pareto21:
        // Inverse CDF of Pareto(shape 2, scale 1): x = u^(-1/2).
        return 1.0 / std::sqrt(gen.next_uniform01());
    }
    throw ValidationError("draw_value: unknown distribution");
}

SampleSystem draw_system(SourceDistribution dist, unsigned m, unsigned n, std::uint64_t seed) {
    if (m < 1 || n < 1)
        throw ValidationError("draw_system: system sizes must be at least 1");
    SplitMix64 gen(seed);
    SampleSystem system;
    system.x_values.reserve(m);
    system.y_values.reserve(n);
    for (unsigned i = 0; i < m; ++i)
        system.x_values.push_back(draw_value(dist, gen));
    for (unsigned i = 0; i < n; ++i)
        system.y_values.push_back(draw_value(dist, gen));
    return system;
}

unsigned observed_l(const SampleSystem& system, unsigned k) {
    const std::size_t m = system.x_values.size();
    const std::size_t n = system.y_values.size();
    if (k > std::min(m, n)) {
        std::ostringstream msg;
        msg << "observed_l: k = " << k << " exceeds min(m, n) = " << std::min(m, n);
        throw ValidationError(msg.str());
    }
    std::vector<double> xs(system.x_values);
    std::vector<double> ys(system.y_values);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    unsigned l = 0;
    for (unsigned i = 0; i < k; ++i) {
        if (xs[i] == ys[i]) {
            std::ostringstream msg;
            msg << "tie between compared order statistics at rank " << (i + 1)
                << " (both equal " << xs[i]
                << "); jitter or rank-preprocess the data to break ties";
            throw TieError(msg.str());
        }
        if (xs[i] < ys[i])
            ++l;
    }
    return l;
}

namespace {

// One trial, resampling from fresh substreams on the (probability ~0)
// event of an exact double tie.
unsigned run_trial(const ComparisonSpec& spec, SourceDistribution dist, std::uint64_t seed,
                   std::uint64_t trial, std::uint64_t& ties) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt > 64)
            throw ConsistencyError("simulate_pmf: persistent ties; generator misbehaving");
        SampleSystem system =
            draw_system(dist, spec.m, spec.n, substream_seed(seed, trial, attempt));
        try {
            return observed_l(system, spec.k);
        } catch (const TieError&) {
            ++ties;
        }
    }
}

struct LaneTally {
    std::vector<std::uint64_t> counts;
    std::uint64_t ties = 0;
};

LaneTally run_lane(const ComparisonSpec& spec, SourceDistribution dist, std::uint64_t seed,
                   std::uint64_t first, std::uint64_t last) {
    LaneTally tally;
    tally.counts.assign(spec.k + 1, 0);
    for (std::uint64_t t = first; t < last; ++t)
        ++tally.counts[run_trial(spec, dist, seed, t, tally.ties)];
    return tally;
}

} // namespace

SimulationResult simulate_pmf(const ComparisonSpec& spec, SourceDistribution dist,
                              std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    if (trials < 1)
        throw ValidationError("simulate_pmf: trials must be at least 1");
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = std::clamp(hw, 1u, 8u);
    }
    if (trials < 4096)
        threads = 1;

    // Each trial owns substream (seed, trial index), so the tally is
    // independent of how trials are split across lanes.
    std::vector<std::future<LaneTally>> lanes;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned lane = 0; lane < threads; ++lane) {
        const std::uint64_t first = lane * chunk;
        const std::uint64_t last = std::min(trials, first + chunk);
        if (first >= last)
            break;
        lanes.push_back(std::async(std::launch::async, run_lane, spec, dist, seed, first, last));
    }

    SimulationResult result{spec, dist, seed, trials, 0, {}, {}};
    std::vector<std::uint64_t> totals(spec.k + 1, 0);
    for (auto& lane : lanes) {
        LaneTally tally = lane.get();
        result.ties_resampled += tally.ties;
        for (unsigned l = 0; l <= spec.k; ++l)
            totals[l] += tally.counts[l];
    }
    for (unsigned l = 0; l <= spec.k; ++l) {
        result.counts[l] = totals[l];
        result.frequencies[l] =
            static_cast<double>(totals[l]) / static_cast<double>(trials);
    }
    return result;
}

} // namespace chaincmp
