#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chaincmp/exactmath.hpp"

namespace chaincmp {

enum class Step : unsigned char { East, North };

// Monotone lattice path from the origin: East = (1,0), North = (0,1).
// Terminal point is (east_count, north_count) by construction.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps);

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    unsigned east_count() const { return east_; }
    unsigned north_count() const { return north_; }

    bool operator==(const LatticePath&) const = default;

private:
    std::vector<Step> steps_;
    unsigned east_ = 0;
    unsigned north_ = 0;
};

// Text format: 'R' = East, 'U' = North. parse_path rejects anything else
// with a position-indexed message and is the exact inverse of format_path.
LatticePath parse_path(std::string_view text);
std::string format_path(const LatticePath& path);

// Exceedance statistics of a path. he counts horizontal edges
// (a,b) -> (a+1,b) with b <= a (below the diagonal); ve counts vertical
// edges (a,b) -> (a,b+1) with b >= a (above it). he_k / ve_k apply the same
// rules restricted to the first k horizontal (resp. vertical) edges in path
// order. For k <= min(m, n): he_k + ve_k = k, and he + ve = max(m, n).
struct ExceedanceProfile {
    unsigned he = 0;
    unsigned ve = 0;
    unsigned he_k = 0;
    unsigned ve_k = 0;
    unsigned k = 0;
};

ExceedanceProfile exceedance(const LatticePath& path, unsigned k);

using Histogram = std::map<unsigned, Count>;

// Exhaustive enumeration is capped so misuse cannot silently take hours.
// The CLI exposes the override (flag and EXCEEDANCE_ENUM_CAP).
inline constexpr unsigned kDefaultEnumerationCap = 26;

// Visits every path terminating at (m, n) exactly once, in lexicographic
// order with R < U. The brute-force backbone for the oracles below.
void enumerate_paths(unsigned m, unsigned n,
                     const std::function<void(const LatticePath&)>& visit,
                     unsigned cap = kDefaultEnumerationCap);

// Histogram of he_k over all C(m+n, m) paths to (m, n), keys 0..k.
// Requires 0 < k <= m <= n. This is the enumeration oracle the closed
// forms are validated against.
Histogram enumerate_exceedance_histogram(unsigned m, unsigned n, unsigned k,
                                         unsigned cap = kDefaultEnumerationCap);

// Histogram of he over all paths to (x, y); only attained values appear.
Histogram enumerate_terminal_histogram(unsigned x, unsigned y,
                                       unsigned cap = kDefaultEnumerationCap);

// Integer-walk view of a path: East -> +1, North -> -1, positions are the
// running sums from 0. The final position is east_count - north_count.
struct WalkView {
    std::vector<int> increments;
    std::vector<int> positions; // size() + 1 entries, positions[0] == 0

    std::size_t size() const { return increments.size(); }
    int final_position() const { return positions.back(); }
};

WalkView to_walk(const LatticePath& path);

// Number of the first num_steps steps lying above the origin. A step from
// p to p' counts iff its midpoint is positive, i.e. p + p' > 0; under the
// path<->walk mapping this is exactly "the matching lattice edge is below
// the diagonal", so the count equals twice the matching he_k.
unsigned time_above_zero(const WalkView& walk, std::size_t num_steps);

} // namespace chaincmp
