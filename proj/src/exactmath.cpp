#include "chaincmp/exactmath.hpp"

#include <sstream>

namespace chaincmp {

Count binomial(unsigned long a, long b) {
    if (b < 0 || static_cast<unsigned long>(b) > a)
        return Count(0);
    Count result;
    mpz_bin_uiui(result.get_mpz_t(), a, static_cast<unsigned long>(b));
    return result;
}

namespace {

// Exact quotient num / den; a nonzero remainder is an arithmetic bug.
Count exact_quotient(const Count& num, const Count& den, const char* what) {
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
        throw ConsistencyError(std::string(what) + ": division is not exact");
    Count q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

Count catalan(unsigned long i) {
    return exact_quotient(binomial(2 * i, static_cast<long>(i)), Count(i + 1), "catalan");
}

Count ballot(unsigned long x, unsigned long y) {
    if (x == 0 && y == 0)
        return Count(1);
    if (x <= y) {
        std::ostringstream msg;
        msg << "ballot(" << x << ", " << y << "): defined only for x > y (or x = y = 0)";
        throw ValidationError(msg.str());
    }
    Count numerator = Count(x - y) * binomial(x + y, static_cast<long>(y));
    return exact_quotient(numerator, Count(x + y), "ballot");
}

ExactProb::ExactProb(const Count& num, const Count& den) : value_(num, den) {
    if (den <= 0)
        throw ValidationError("ExactProb: denominator must be positive");
    if (num < 0 || num > den)
        throw ValidationError("ExactProb: numerator must lie in [0, denominator]");
    value_.canonicalize();
}

std::string ExactProb::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactProb::to_decimal_string(unsigned digits) const {
    const Count num = numerator();
    const Count den = denominator();
    if (num == 0)
        return "0";

    Count scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    // Round half up: floor((num * scale + den/2) / den).
    Count scaled = (num * scale + den / 2) / den;
    Count whole = scaled / scale;
    Count frac = scaled % scale;

    if (frac == 0 || digits == 0)
        return whole.get_str();

    std::string frac_str = frac.get_str();
    frac_str.insert(0, digits - frac_str.size(), '0');
    while (!frac_str.empty() && frac_str.back() == '0')
        frac_str.pop_back();
    return whole.get_str() + "." + frac_str;
}

} // namespace chaincmp
