#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "chaincmp/asymptotics.hpp"

using namespace chaincmp;

TEST_CASE("rescaled density of the uniform (2,2,2) law") {
    const RescaledDensity density = rescaled_pmf(ComparisonSpec(2, 2, 2));
    REQUIRE(density.points.size() == 3);
    for (unsigned l = 0; l <= 2; ++l) {
        CHECK(density.points[l].l == l);
        CHECK(density.points[l].x == doctest::Approx(l / 2.0));
        CHECK(density.points[l].density == doctest::Approx(2.0 / 3.0));
        CHECK(density.points[l].mass == ExactProb(Count(1), Count(3)));
    }
}

TEST_CASE("rescaled density for k = 1 keeps the Riemann mass at one") {
    // k * {1/2, 1/2} = {1/2, 1/2} on the grid {0, 1}, whose cells have
    // width 1/k = 1: the discretized mass is (1/1) * (1/2 + 1/2) = 1.
    const RescaledDensity density = rescaled_pmf(ComparisonSpec(2, 2, 1));
    REQUIRE(density.points.size() == 2);
    CHECK(density.points[0].density == doctest::Approx(0.5));
    CHECK(density.points[1].density == doctest::Approx(0.5));
    CHECK(density.points[0].x == 0.0);
    CHECK(density.points[1].x == 1.0);
}

TEST_CASE("rescaled mass is exactly one") {
    for (unsigned m = 1; m <= 10; ++m)
        for (unsigned n = m; m + n <= 20; ++n)
            for (unsigned k = 1; k <= m; ++k) {
                const RescaledDensity density = rescaled_pmf(ComparisonSpec(m, n, k));
                mpq_class riemann(0);
                for (const DensityPoint& p : density.points)
                    riemann += p.mass.value() * k; // density, exactly
                riemann /= k;
                CHECK(riemann == 1);
            }
}

TEST_CASE("symmetric specs have palindromic masses and balanced fits") {
    for (unsigned n = 2; n <= 9; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            const PMFTable table = pmf(ComparisonSpec(n, n, k));
            for (unsigned l = 0; l <= k; ++l)
                CHECK(table.prob(l) == table.prob(k - l));
            if (k >= 2) {
                const BetaFit fit = beta_moment_fit(rescale_table(table));
                CHECK(std::abs(fit.alpha - fit.beta_param) < 1e-10);
                CHECK(fit.mean == doctest::Approx(0.5).epsilon(1e-12));
            }
        }
}

TEST_CASE("beta fit of the flat 3-point law") {
    const BetaFit fit = beta_moment_fit(rescaled_pmf(ComparisonSpec(2, 2, 2)));
    CHECK(fit.alpha == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(fit.beta_param == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(fit.mean == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.variance == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("beta fit inverts its own moments") {
    for (unsigned m = 2; m <= 8; ++m)
        for (unsigned n = m; n <= 9; ++n)
            for (unsigned k = 2; k <= m; ++k) {
                const BetaFit fit = beta_moment_fit(rescaled_pmf(ComparisonSpec(m, n, k)));
                CHECK(fit.alpha > 0.0);
                CHECK(fit.beta_param > 0.0);
                const double total = fit.alpha + fit.beta_param;
                const double mean_back = fit.alpha / total;
                const double var_back =
                    fit.alpha * fit.beta_param / (total * total * (total + 1.0));
                CHECK(std::abs(mean_back - fit.mean) < 1e-12);
                CHECK(std::abs(var_back - fit.variance) < 1e-12);
            }
}

TEST_CASE("beta fit rejects degenerate moment sets") {
    // Any k = 1 law lives on {0, 1}, where v = mu(1 - mu) exactly.
    CHECK_THROWS_AS(beta_moment_fit(rescaled_pmf(ComparisonSpec(2, 2, 1))), ValidationError);
    CHECK_THROWS_AS(beta_moment_fit(rescaled_pmf(ComparisonSpec(3, 7, 1))), ValidationError);
}

TEST_CASE("beta pdf endpoints and interior") {
    CHECK(beta_pdf(0.0, 0.25, 0.25) == std::numeric_limits<double>::infinity());
    CHECK(beta_pdf(1.0, 0.25, 0.25) == std::numeric_limits<double>::infinity());
    CHECK(beta_pdf(0.5, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(beta_pdf(0.25, 2.0, 2.0) == doctest::Approx(6.0 * 0.25 * 0.75));
    CHECK_THROWS_AS(beta_pdf(1.5, 1.0, 1.0), ValidationError);
}

TEST_CASE("arcsine reference values") {
    CHECK(arcsine_reference(0.5).cdf == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(arcsine_reference(0.0).cdf == 0.0);
    CHECK(arcsine_reference(1.0).cdf == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(arcsine_reference(0.25).cdf == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(arcsine_reference(0.0).pdf == std::numeric_limits<double>::infinity());
    CHECK(arcsine_reference(1.0).pdf == std::numeric_limits<double>::infinity());
    CHECK(arcsine_reference(0.5).pdf == doctest::Approx(2.0 / std::numbers::pi));
    CHECK_THROWS_AS(arcsine_reference(-0.1), ValidationError);
    CHECK_THROWS_AS(arcsine_reference(1.1), ValidationError);
}

TEST_CASE("symmetric case table rows are ordered and bounded") {
    const SymmetricCaseTable table = symmetric_case_table({3, 1, 2, 3});
    REQUIRE(table.rows.size() == 3); // deduplicated
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const SymmetricCaseRow& row = table.rows[i];
        CHECK(row.m == 2 * row.k);
        CHECK(row.n == 2 * row.k);
        CHECK(row.sup_distance >= 0.0);
        CHECK(row.sup_distance <= 1.0);
        if (i > 0)
            CHECK(table.rows[i - 1].k < row.k);
    }
    CHECK_THROWS_AS(symmetric_case_table({0}), ValidationError);
}

TEST_CASE("grid cdf reaches one exactly at x = 1") {
    for (unsigned k : {1u, 2u, 5u}) {
        const PMFTable table = pmf(ComparisonSpec(2 * k, 2 * k, k));
        Count running = 0;
        for (unsigned l = 0; l <= k; ++l)
            running += table.count(l);
        CHECK(running == table.total());
    }
}
