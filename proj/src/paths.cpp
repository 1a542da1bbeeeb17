#include "chaincmp/paths.hpp"

#include <algorithm>
#include <sstream>

namespace chaincmp {

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
    for (Step s : steps_) {
        if (s == Step::East)
            ++east_;
        else
            ++north_;
    }
}

LatticePath parse_path(std::string_view text) {
    if (text.empty())
        throw ValidationError("parse_path: empty path text");
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'R': steps.push_back(Step::East); break;
        case 'U': steps.push_back(Step::North); break;
        default: {
            std::ostringstream msg;
            msg << "parse_path: invalid character '" << text[i] << "' at index " << i
                << " (expected 'R' or 'U')";
            throw ValidationError(msg.str());
        }
        }
    }
    return LatticePath(std::move(steps));
}

std::string format_path(const LatticePath& path) {
    std::string out;
    out.reserve(path.size());
    for (Step s : path.steps())
        out.push_back(s == Step::East ? 'R' : 'U');
    return out;
}

ExceedanceProfile exceedance(const LatticePath& path, unsigned k) {
    const unsigned m = path.east_count();
    const unsigned n = path.north_count();
    if (k > std::min(m, n)) {
        std::ostringstream msg;
        msg << "exceedance: k = " << k << " exceeds min(m, n) = " << std::min(m, n);
        throw ValidationError(msg.str());
    }

    ExceedanceProfile profile;
    profile.k = k;
    unsigned a = 0, b = 0;      // current vertex
    unsigned h_seen = 0, v_seen = 0;
    for (Step s : path.steps()) {
        if (s == Step::East) {
            ++h_seen;
            if (b <= a) {
                ++profile.he;
                if (h_seen <= k)
                    ++profile.he_k;
            }
            ++a;
        } else {
            ++v_seen;
            if (b >= a) {
                ++profile.ve;
                if (v_seen <= k)
                    ++profile.ve_k;
            }
            ++b;
        }
    }
    return profile;
}

namespace {

void check_cap(unsigned total, unsigned cap, const char* what) {
    if (total > cap) {
        std::ostringstream msg;
        msg << what << ": " << total << " total steps exceeds the enumeration cap " << cap;
        throw ValidationError(msg.str());
    }
}

void visit_rec(std::vector<Step>& steps, unsigned a, unsigned b, unsigned m, unsigned n,
               const std::function<void(const LatticePath&)>& visit) {
    if (a == m && b == n) {
        visit(LatticePath(steps));
        return;
    }
    if (a < m) {
        steps.push_back(Step::East);
        visit_rec(steps, a + 1, b, m, n, visit);
        steps.pop_back();
    }
    if (b < n) {
        steps.push_back(Step::North);
        visit_rec(steps, a, b + 1, m, n, visit);
        steps.pop_back();
    }
}

// Shared-prefix recursion carrying the statistics incrementally, so the
// histogram costs one visit per enumeration-tree node instead of
// re-scanning every complete path.
void histogram_rec(unsigned a, unsigned b, unsigned m, unsigned n, unsigned k,
                   unsigned h_seen, unsigned stat, bool restrict_to_first_k,
                   Histogram& out) {
    if (a == m && b == n) {
        out[stat] += 1;
        return;
    }
    if (a < m) {
        const bool below = (b <= a);
        const bool counted = below && (!restrict_to_first_k || h_seen < k);
        histogram_rec(a + 1, b, m, n, k, h_seen + 1, stat + (counted ? 1u : 0u),
                      restrict_to_first_k, out);
    }
    if (b < n)
        histogram_rec(a, b + 1, m, n, k, h_seen, stat, restrict_to_first_k, out);
}

} // namespace

void enumerate_paths(unsigned m, unsigned n,
                     const std::function<void(const LatticePath&)>& visit, unsigned cap) {
    check_cap(m + n, cap, "enumerate_paths");
    std::vector<Step> steps;
    steps.reserve(m + n);
    visit_rec(steps, 0, 0, m, n, visit);
}

Histogram enumerate_exceedance_histogram(unsigned m, unsigned n, unsigned k, unsigned cap) {
    if (!(0 < k && k <= m && m <= n)) {
        std::ostringstream msg;
        msg << "enumerate_exceedance_histogram: require 0 < k <= m <= n (got m=" << m
            << " n=" << n << " k=" << k << ")";
        throw ValidationError(msg.str());
    }
    check_cap(m + n, cap, "enumerate_exceedance_histogram");

    Histogram hist;
    for (unsigned l = 0; l <= k; ++l)
        hist[l] = 0;
    histogram_rec(0, 0, m, n, k, 0, 0, /*restrict_to_first_k=*/true, hist);

    Count sum = 0;
    for (const auto& [l, count] : hist)
        sum += count;
    if (sum != binomial(m + n, static_cast<long>(m)))
        throw ConsistencyError("enumerate_exceedance_histogram: path count mismatch");
    return hist;
}

Histogram enumerate_terminal_histogram(unsigned x, unsigned y, unsigned cap) {
    check_cap(x + y, cap, "enumerate_terminal_histogram");
    Histogram hist;
    histogram_rec(0, 0, x, y, 0, 0, 0, /*restrict_to_first_k=*/false, hist);
    return hist;
}

WalkView to_walk(const LatticePath& path) {
    WalkView walk;
    walk.increments.reserve(path.size());
    walk.positions.reserve(path.size() + 1);
    walk.positions.push_back(0);
    int pos = 0;
    for (Step s : path.steps()) {
        const int inc = (s == Step::East) ? +1 : -1;
        walk.increments.push_back(inc);
        pos += inc;
        walk.positions.push_back(pos);
    }
    return walk;
}

unsigned time_above_zero(const WalkView& walk, std::size_t num_steps) {
    if (num_steps > walk.size()) {
        std::ostringstream msg;
        msg << "time_above_zero: num_steps = " << num_steps << " exceeds walk length "
            << walk.size();
        throw ValidationError(msg.str());
    }
    unsigned above = 0;
    for (std::size_t i = 0; i < num_steps; ++i)
        if (walk.positions[i] + walk.positions[i + 1] > 0)
            ++above;
    return above;
}

} // namespace chaincmp
