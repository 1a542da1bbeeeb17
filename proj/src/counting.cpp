#include "chaincmp/counting.hpp"

#include <sstream>

namespace chaincmp {

ComparisonSpec::ComparisonSpec(unsigned m_, unsigned n_, unsigned k_) : m(m_), n(n_), k(k_) {
    if (!(0 < k && k <= m && m <= n)) {
        std::ostringstream msg;
        msg << "ComparisonSpec: require 0 < k <= m <= n (got m=" << m << " n=" << n
            << " k=" << k << ")";
        throw ValidationError(msg.str());
    }
}

Count count_terminal(unsigned x, unsigned y, unsigned l) {
    if (x == y)
        return (l <= x) ? catalan(x) : Count(0);

    if (x < y) {
        // Reflection: #(x, y, l) = #(y, x, max(x, y) - l).
        if (l > y)
            return Count(0);
        return count_terminal(y, x, y - l);
    }

    // x > y: condition on the last diagonal contact (i, i); the tail from
    // there stays strictly below the diagonal and contributes x - i to the
    // horizontal exceedance.
    if (l < x - y || l > x)
        return Count(0);
    Count sum = 0;
    for (unsigned i = x - l; i <= y; ++i)
        sum += catalan(i) * ballot(x - i, y - i);
    return sum;
}

Count count_k_exceedance(const ComparisonSpec& spec, unsigned l) {
    const unsigned m = spec.m, n = spec.n, k = spec.k;
    if (l > k) {
        std::ostringstream msg;
        msg << "count_k_exceedance: l = " << l << " exceeds k = " << k;
        throw ValidationError(msg.str());
    }

    // Partition by where the path first leaves the k-by-k box: through the
    // top edge at (j, k), or through the right edge at (k, j). The initial
    // segment fixes the k-exceedance, the remainder is a free path to
    // (m, n). j = k-1 collapses to a pure Catalan segment.
    Count total = 0;

    // Exit through the top at (j, k); requires j >= l.
    for (unsigned j = l; j + 1 <= k; ++j) {
        if (j == k - 1) {
            total += binomial(m + n - 2 * k + 1, static_cast<long>(n - k)) * catalan(k - 1);
        } else {
            Count inner = 0;
            for (unsigned i = l; i <= j; ++i)
                inner += catalan(i) * ballot(k - 1 - i, j - i);
            total += binomial(m + n - k - j, static_cast<long>(n - k)) * inner;
        }
    }

    // Exit through the right at (k, j); requires j >= k - l.
    for (unsigned j = k - l; j + 1 <= k; ++j) {
        if (j == k - 1) {
            total += binomial(m + n - 2 * k + 1, static_cast<long>(m - k)) * catalan(k - 1);
        } else {
            Count inner = 0;
            for (unsigned i = k - l; i <= j; ++i)
                inner += catalan(i) * ballot(k - 1 - i, j - i);
            total += binomial(m + n - k - j, static_cast<long>(m - k)) * inner;
        }
    }

    return total;
}

PMFTable::PMFTable(const ComparisonSpec& spec) : spec_(spec) {
    total_ = binomial(spec.m + spec.n, static_cast<long>(spec.m));
    Count sum = 0;
    for (unsigned l = 0; l <= spec.k; ++l) {
        Count c = count_k_exceedance(spec, l);
        sum += c;
        counts_.emplace(l, std::move(c));
    }
    if (sum != total_) {
        std::ostringstream msg;
        msg << "PMFTable(m=" << spec.m << ", n=" << spec.n << ", k=" << spec.k
            << "): counts sum to " << sum.get_str() << ", expected " << total_.get_str();
        throw ConsistencyError(msg.str());
    }
    for (unsigned l = 0; l <= spec.k; ++l)
        probs_.emplace(l, ExactProb(counts_.at(l), total_));
}

const Count& PMFTable::count(unsigned l) const {
    auto it = counts_.find(l);
    if (it == counts_.end())
        throw ValidationError("PMFTable::count: l out of range");
    return it->second;
}

const ExactProb& PMFTable::prob(unsigned l) const {
    auto it = probs_.find(l);
    if (it == probs_.end())
        throw ValidationError("PMFTable::prob: l out of range");
    return it->second;
}

PMFTable pmf(const ComparisonSpec& spec) {
    return PMFTable(spec);
}

ExactProb cdf(const PMFTable& table, long l) {
    if (l < 0)
        return ExactProb::zero();
    if (l >= static_cast<long>(table.spec().k))
        return ExactProb::one();
    Count sum = 0;
    for (long j = 0; j <= l; ++j)
        sum += table.count(static_cast<unsigned>(j));
    return ExactProb(sum, table.total());
}

} // namespace chaincmp
