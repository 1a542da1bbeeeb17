#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "chaincmp/counting.hpp"

namespace chaincmp {

enum class Alternative { Less, Greater, TwoSided };

std::string_view alternative_name(Alternative alt);
Alternative parse_alternative(std::string_view name);

// Exact p-value of observing l under the table's null distribution:
//   greater   Pr(L >= l)
//   less      Pr(L <= l)
//   two_sided sum of pmf(j) over outcomes no more likely than l
//             (minimum-likelihood convention for discrete exact tests)
ExactProb p_value(const PMFTable& table, unsigned l, Alternative alt);

// Result of the exact nonparametric two-sample test. The statistic depends
// only on ranks, so no distributional assumption enters. When the first
// sample is larger than the second, the null PMF is computed on the swapped
// sizes and read through L -> k - L; `swapped` records that reduction and
// pmf_used holds the table actually computed.
struct TestReport {
    unsigned m; // size of the first (X) sample, as the user labeled it
    unsigned n; // size of the second (Y) sample
    unsigned k;
    unsigned observed; // l = |{i <= k : x_(i) < y_(i)}|
    Alternative alternative;
    ExactProb p;
    bool swapped;
    PMFTable pmf_used;
};

// Runs the test of H0 "all m + n observations are continuous i.i.d."
// against the chosen alternative. Requires 1 <= k <= min(|xs|, |ys|),
// finite inputs, and no tie among the compared order statistics.
TestReport run_test(std::span<const double> xs, std::span<const double> ys, unsigned k,
                    Alternative alt);

// Sample file format: one decimal number per line; blank lines and lines
// whose first non-space character is '#' are ignored. Errors carry
// "path:line:" diagnostics.
std::vector<double> read_sample_file(const std::filesystem::path& path);

} // namespace chaincmp
