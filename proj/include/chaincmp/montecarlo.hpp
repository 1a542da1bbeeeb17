#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "chaincmp/counting.hpp"

namespace chaincmp {

// Continuous source models for the sampling experiment. The comparison
// statistic depends only on ranks, so the exact PMF is the same under every
// one of them; simulating several kinds is how that gets validated.
enum class SourceDistribution {
    Uniform01,      // uniform on (0, 1)
    Exponential1,   // exponential, rate 1
    StandardNormal, // normal(0, 1), Box-Muller
    Pareto21,       // Pareto, shape 2, scale 1
};

std::string_view distribution_name(SourceDistribution dist);
SourceDistribution parse_distribution(std::string_view name);

// Deterministic 64-bit generator (splitmix64). Substreams are derived by
// remixing (seed, trial, attempt), so trials can run on any number of lanes
// and still reproduce bit-for-bit.
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform on the open interval (0, 1); never returns an endpoint, so
    // log/power transforms stay finite.
    double next_uniform01();

private:
    std::uint64_t state_;
};

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt);

double draw_value(SourceDistribution dist, SplitMix64& gen);

// One realized experiment: m draws for system X, n draws for system Y.
struct SampleSystem {
    std::vector<double> x_values;
    std::vector<double> y_values;
};

// m + n independent draws from dist; identical (dist, m, n, seed) yields
// identical output.
SampleSystem draw_system(SourceDistribution dist, unsigned m, unsigned n, std::uint64_t seed);

// The comparison statistic: sort both sides ascending and count indices
// i <= k with x_(i) < y_(i). An exact tie at a compared rank is a TieError,
// never silently broken.
unsigned observed_l(const SampleSystem& system, unsigned k);

struct SimulationResult {
    ComparisonSpec spec;
    SourceDistribution dist;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t ties_resampled = 0;
    std::map<unsigned, std::uint64_t> counts;  // l -> occurrences, keys 0..k
    std::map<unsigned, double> frequencies;    // counts / trials
};

// Runs `trials` independent experiments and tabulates the statistic.
// Tie-struck trials are resampled from a fresh substream and tallied in
// ties_resampled. threads = 0 picks a lane count automatically; the result
// is identical for every lane count.
SimulationResult simulate_pmf(const ComparisonSpec& spec, SourceDistribution dist,
                              std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

} // namespace chaincmp
