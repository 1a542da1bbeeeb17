#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaincmp/counting.hpp"
#include "chaincmp/paths.hpp"

using namespace chaincmp;

namespace {

Count histogram_value(const Histogram& hist, unsigned l) {
    auto it = hist.find(l);
    return it == hist.end() ? Count(0) : it->second;
}

} // namespace

TEST_CASE("ComparisonSpec validates 0 < k <= m <= n") {
    CHECK_NOTHROW(ComparisonSpec(1, 1, 1));
    CHECK_NOTHROW(ComparisonSpec(2, 3, 2));
    CHECK_THROWS_AS(ComparisonSpec(2, 2, 0), ValidationError);
    CHECK_THROWS_AS(ComparisonSpec(3, 2, 1), ValidationError);
    CHECK_THROWS_AS(ComparisonSpec(2, 3, 3), ValidationError);
}

TEST_CASE("count_terminal examples") {
    CHECK(count_terminal(2, 1, 2) == 2);
    CHECK(count_terminal(2, 1, 0) == 0);
    CHECK(count_terminal(3, 3, 2) == 5);
    CHECK(count_terminal(1, 2, 0) == 2);
    CHECK(count_terminal(0, 0, 0) == 1);
    CHECK(count_terminal(0, 0, 1) == 0);
    CHECK(count_terminal(4, 2, 7) == 0);
    CHECK(count_terminal(1, 2, 5) == 0);
}

TEST_CASE("count_terminal matches enumeration for x + y <= 12") {
    for (unsigned x = 0; x <= 12; ++x)
        for (unsigned y = 0; x + y <= 12; ++y) {
            const Histogram oracle = enumerate_terminal_histogram(x, y);
            for (unsigned l = 0; l <= x + 1; ++l)
                CHECK(count_terminal(x, y, l) == histogram_value(oracle, l));
        }
}

TEST_CASE("count_terminal satisfies the edge-deletion recursion") {
    for (unsigned x = 1; x <= 10; ++x)
        for (unsigned y = 0; y < x && y <= 10; ++y)
            for (unsigned l = 0; l <= x + 1; ++l) {
                const Count left = (l >= 1) ? count_terminal(x - 1, y, l - 1) : Count(0);
                const Count right = (y >= 1) ? count_terminal(x, y - 1, l) : Count(0);
                CHECK(count_terminal(x, y, l) == left + right);
            }
}

TEST_CASE("Chung-Feller totals") {
    for (unsigned i = 0; i <= 10; ++i) {
        Count sum = 0;
        for (unsigned l = 0; l <= i; ++l) {
            CHECK(count_terminal(i, i, l) == catalan(i));
            sum += count_terminal(i, i, l);
        }
        CHECK(sum == binomial(2 * i, static_cast<long>(i)));
    }
}

TEST_CASE("reflection involution") {
    for (unsigned x = 0; x <= 14; ++x)
        for (unsigned y = 0; x + y <= 14; ++y)
            for (unsigned l = 0; l <= std::max(x, y); ++l)
                CHECK(count_terminal(x, y, l) ==
                      count_terminal(y, x, std::max(x, y) - l));
}

TEST_CASE("count_k_exceedance examples") {
    CHECK(count_k_exceedance(ComparisonSpec(2, 2, 1), 0) == 3);
    CHECK(count_k_exceedance(ComparisonSpec(2, 3, 2), 1) == 3);
    CHECK(count_k_exceedance(ComparisonSpec(2, 2, 2), 1) == 2);
    CHECK_THROWS_AS(count_k_exceedance(ComparisonSpec(2, 2, 1), 2), ValidationError);
}

TEST_CASE("count_k_exceedance matches enumeration for m + n <= 12") {
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned n = m; m + n <= 12; ++n)
            for (unsigned k = 1; k <= m; ++k) {
                const ComparisonSpec spec(m, n, k);
                const Histogram oracle = enumerate_exceedance_histogram(m, n, k);
                for (unsigned l = 0; l <= k; ++l)
                    CHECK(count_k_exceedance(spec, l) == oracle.at(l));
            }
}

TEST_CASE("counts sum to the number of arrangements") {
    for (unsigned m = 1; m <= 10; ++m)
        for (unsigned n = m; m + n <= 20; ++n)
            for (unsigned k = 1; k <= m; ++k) {
                Count sum = 0;
                for (unsigned l = 0; l <= k; ++l)
                    sum += count_k_exceedance(ComparisonSpec(m, n, k), l);
                CHECK(sum == binomial(m + n, static_cast<long>(m)));
            }
}

TEST_CASE("k = m = n degenerates to the uniform Catalan law") {
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned l = 0; l <= n; ++l)
            CHECK(count_k_exceedance(ComparisonSpec(n, n, n), l) == catalan(n));
}

TEST_CASE("pmf tables of the worked specs") {
    const PMFTable t221 = pmf(ComparisonSpec(2, 2, 1));
    CHECK(t221.total() == 6);
    CHECK(t221.prob(0) == ExactProb(Count(1), Count(2)));
    CHECK(t221.prob(1) == ExactProb(Count(1), Count(2)));

    const PMFTable t232 = pmf(ComparisonSpec(2, 3, 2));
    CHECK(t232.count(0) == 5);
    CHECK(t232.count(1) == 3);
    CHECK(t232.count(2) == 2);
    CHECK(t232.prob(0) == ExactProb(Count(1), Count(2)));
    CHECK(t232.prob(1) == ExactProb(Count(3), Count(10)));
    CHECK(t232.prob(2) == ExactProb(Count(1), Count(5)));

    const PMFTable t222 = pmf(ComparisonSpec(2, 2, 2));
    for (unsigned l = 0; l <= 2; ++l)
        CHECK(t222.prob(l) == ExactProb(Count(1), Count(3)));
}

TEST_CASE("pmf probabilities are stored in lowest terms and sum to one") {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned n = m; n <= 6; ++n)
            for (unsigned k = 1; k <= m; ++k) {
                const PMFTable table = pmf(ComparisonSpec(m, n, k));
                mpq_class sum(0);
                for (const auto& [l, p] : table.probs()) {
                    Count g;
                    mpz_gcd(g.get_mpz_t(), p.numerator().get_mpz_t(),
                            p.denominator().get_mpz_t());
                    CHECK(g == 1);
                    sum += p.value();
                }
                CHECK(sum == 1);
            }
}

TEST_CASE("pmf rejects out-of-range lookups") {
    const PMFTable table = pmf(ComparisonSpec(2, 2, 1));
    CHECK_THROWS_AS(table.prob(2), ValidationError);
    CHECK_THROWS_AS(table.count(5), ValidationError);
}

TEST_CASE("cdf tail values") {
    const PMFTable t221 = pmf(ComparisonSpec(2, 2, 1));
    CHECK(cdf(t221, 0) == ExactProb(Count(1), Count(2)));
    CHECK(cdf(t221, 1) == ExactProb::one());

    const PMFTable t232 = pmf(ComparisonSpec(2, 3, 2));
    CHECK(cdf(t232, 1) == ExactProb(Count(4), Count(5)));
    CHECK(cdf(t232, -1) == ExactProb::zero());
    CHECK(cdf(t232, 2) == ExactProb::one());
    CHECK(cdf(t232, 99) == ExactProb::one());
}
