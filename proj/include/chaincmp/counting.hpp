#pragma once

#include <map>

#include "chaincmp/exactmath.hpp"

namespace chaincmp {

// Validated parameter triple for comparing the bottom-k order statistics of
// a size-m system against a size-n system. Requires 0 < k <= m <= n; the
// m <= n convention loses no generality (callers with m > n reduce by
// reflection, see inference).
struct ComparisonSpec {
    unsigned m;
    unsigned n;
    unsigned k;

    ComparisonSpec(unsigned m, unsigned n, unsigned k);

    bool operator==(const ComparisonSpec&) const = default;
};

// #(x, y, l): the number of monotone paths to (x, y) with horizontal
// exceedance l.
//   x == y : catalan(x) for 0 <= l <= x, else 0 (Chung-Feller: the C(2x,x)
//            paths split evenly across the x+1 attainable exceedances)
//   x > y  : sum_{i = x-l}^{y} catalan(i) * ballot(x-i, y-i)
//            for x-y <= l <= x, else 0
//   x < y  : #(y, x, max(x,y) - l) by reflection across the diagonal
Count count_terminal(unsigned x, unsigned y, unsigned l);

// #(m, n, k, l): the number of paths to (m, n) whose k-horizontal
// exceedance is l, summed over the point where the path first leaves the
// k-by-k box. Agrees with enumerate_exceedance_histogram everywhere.
Count count_k_exceedance(const ComparisonSpec& spec, unsigned l);

// The exact distribution of L = (number of the first k pairwise
// order-statistic comparisons won by the larger system): counts over the
// C(m+n, m) equally likely arrangements, and the matching probabilities in
// lowest terms. Construction re-checks that the counts sum to C(m+n, m)
// and fails loudly if not.
class PMFTable {
public:
    explicit PMFTable(const ComparisonSpec& spec);

    const ComparisonSpec& spec() const { return spec_; }
    const Count& total() const { return total_; }

    const Count& count(unsigned l) const;
    const ExactProb& prob(unsigned l) const;

    const std::map<unsigned, Count>& counts() const { return counts_; }
    const std::map<unsigned, ExactProb>& probs() const { return probs_; }

private:
    ComparisonSpec spec_;
    Count total_;
    std::map<unsigned, Count> counts_;
    std::map<unsigned, ExactProb> probs_;
};

PMFTable pmf(const ComparisonSpec& spec);

// Pr(L <= l). Returns 0 for l < 0 and 1 for l >= k.
ExactProb cdf(const PMFTable& table, long l);

} // namespace chaincmp
