#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "chaincmp/errors.hpp"

namespace chaincmp {

// Arbitrary-precision nonnegative integer. All path counts, binomials,
// Catalan and ballot numbers live here; nothing in the public API may
// overflow.
using Count = mpz_class;

// C(a, b). Returns 0 when b < 0 or b > a, so composite summations can be
// written without range guards.
Count binomial(unsigned long a, long b);

// i-th Catalan number C_i = C(2i, i) / (i + 1). The division is checked to
// be exact; a nonzero remainder raises ConsistencyError.
Count catalan(unsigned long i);

// Ballot number b(x, y) = ((x - y) / (x + y)) * C(x + y, y): the number of
// monotone paths from the origin to (x, y) that stay strictly below y = x
// except at the origin. Defined for x > y >= 0; b(0, 0) := 1 (empty path).
// Any other x <= y is a ValidationError.
Count ballot(unsigned long x, unsigned long y);

// An exact rational probability in [0, 1], stored in lowest terms with a
// positive denominator. Equality is plain numerator/denominator equality.
class ExactProb {
public:
    ExactProb() : value_(0, 1) {}

    // Validates 0 <= num <= den, den > 0, then reduces.
    ExactProb(const Count& num, const Count& den);

    static ExactProb zero() { return ExactProb(); }
    static ExactProb one() { return ExactProb(1, 1); }

    Count numerator() const { return Count(value_.get_num()); }
    Count denominator() const { return Count(value_.get_den()); }

    // The underlying canonical rational, for exact arithmetic in callers
    // that need sums beyond [0, 1] (tail identities and the like).
    const mpq_class& value() const { return value_; }

    double to_double() const { return value_.get_d(); }

    // "num/den", e.g. "3/10"; whole numbers still render with the
    // denominator ("1/1") so the format is uniform and parseable.
    std::string to_fraction_string() const;

    // Fixed-point decimal with `digits` fractional digits, round half up,
    // trailing zeros trimmed: 1/2 -> "0.5", 1/3 -> "0.333333333333".
    std::string to_decimal_string(unsigned digits = 12) const;

    friend bool operator==(const ExactProb& a, const ExactProb& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const ExactProb& a, const ExactProb& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExactProb& a, const ExactProb& b) {
        return a.value_ <= b.value_;
    }

private:
    mpq_class value_;
};

} // namespace chaincmp
