#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaincmp/exactmath.hpp"
#include "chaincmp/paths.hpp"

using namespace chaincmp;

namespace {

// Independent oracle: paths to (x, y) whose every vertex after the origin
// lies strictly below the diagonal, counted by direct enumeration.
Count brute_force_strictly_below(unsigned x, unsigned y) {
    Count total = 0;
    enumerate_paths(x, y, [&](const LatticePath& path) {
        unsigned a = 0, b = 0;
        for (Step s : path.steps()) {
            if (s == Step::East)
                ++a;
            else
                ++b;
            if (b >= a)
                return;
        }
        total += 1;
    });
    return total;
}

} // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(10, 4) == 210);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(52, 26) == Count("495918532948104"));
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
    for (unsigned long a = 1; a <= 30; ++a)
        for (long b = 1; b + 1 <= static_cast<long>(a); ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("catalan values") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    // Dyck paths to (8,8) with exceedance 0, counted by brute force.
    CHECK(catalan(8) == enumerate_terminal_histogram(8, 8).at(0));
    CHECK(catalan(8) == 1430);
}

TEST_CASE("catalan times (i+1) recovers the central binomial") {
    for (unsigned long i = 0; i <= 12; ++i)
        CHECK(Count(i + 1) * catalan(i) == binomial(2 * i, static_cast<long>(i)));
}

TEST_CASE("ballot values") {
    CHECK(ballot(2, 1) == 1);
    CHECK(ballot(3, 1) == 2);
    CHECK(ballot(1, 0) == 1);
    CHECK(ballot(0, 0) == 1);
}

TEST_CASE("ballot rejects x <= y away from the origin") {
    CHECK_THROWS_AS(ballot(1, 1), ValidationError);
    CHECK_THROWS_AS(ballot(0, 1), ValidationError);
    CHECK_THROWS_AS(ballot(3, 5), ValidationError);
}

TEST_CASE("ballot quotient and difference forms agree") {
    for (unsigned long x = 1; x <= 12; ++x)
        for (unsigned long y = 0; y < x; ++y)
            CHECK(ballot(x, y) == binomial(x + y - 1, static_cast<long>(y)) -
                                      binomial(x + y - 1, static_cast<long>(y) - 1));
}

TEST_CASE("ballot matches strict-below enumeration") {
    for (unsigned x = 1; x <= 10; ++x)
        for (unsigned y = 0; y < x; ++y)
            CHECK(ballot(x, y) == brute_force_strictly_below(x, y));
}

TEST_CASE("ExactProb reduces to lowest terms") {
    ExactProb p(Count(25), Count(1000));
    CHECK(p.numerator() == 1);
    CHECK(p.denominator() == 40);
    CHECK(p == ExactProb(Count(1), Count(40)));
}

TEST_CASE("ExactProb validates its range") {
    CHECK_THROWS_AS(ExactProb(Count(3), Count(2)), ValidationError);
    CHECK_THROWS_AS(ExactProb(Count(1), Count(0)), ValidationError);
    CHECK_NOTHROW(ExactProb(Count(0), Count(7)));
    CHECK_NOTHROW(ExactProb(Count(7), Count(7)));
}

TEST_CASE("ExactProb rendering") {
    CHECK(ExactProb(Count(3), Count(10)).to_fraction_string() == "3/10");
    CHECK(ExactProb(Count(1), Count(2)).to_decimal_string() == "0.5");
    CHECK(ExactProb(Count(1), Count(5)).to_decimal_string() == "0.2");
    CHECK(ExactProb(Count(1), Count(3)).to_decimal_string() == "0.333333333333");
    CHECK(ExactProb(Count(2), Count(3)).to_decimal_string() == "0.666666666667");
    CHECK(ExactProb(Count(0), Count(3)).to_decimal_string() == "0");
    CHECK(ExactProb(Count(3), Count(3)).to_decimal_string() == "1");
    CHECK(ExactProb(Count(1), Count(8)).to_decimal_string(2) == "0.13");
    CHECK(ExactProb::one().to_fraction_string() == "1/1");
}

TEST_CASE("ExactProb ordering") {
    CHECK(ExactProb(Count(1), Count(3)) < ExactProb(Count(1), Count(2)));
    CHECK(ExactProb(Count(1), Count(2)) <= ExactProb(Count(2), Count(4)));
}
