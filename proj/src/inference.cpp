#include "chaincmp/inference.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chaincmp/montecarlo.hpp"

namespace chaincmp {

std::string_view alternative_name(Alternative alt) {
    switch (alt) {
    case Alternative::Less: return "less";
    case Alternative::Greater: return "greater";
    case Alternative::TwoSided: return "two_sided";
    }
    throw ValidationError("alternative_name: unknown alternative");
}

Alternative parse_alternative(std::string_view name) {
    if (name == "less") return Alternative::Less;
    if (name == "greater") return Alternative::Greater;
    if (name == "two_sided" || name == "two-sided") return Alternative::TwoSided;
    throw ValidationError("unknown alternative '" + std::string(name) +
                          "' (expected less, greater, or two_sided)");
}

ExactProb p_value(const PMFTable& table, unsigned l, Alternative alt) {
    const unsigned k = table.spec().k;
    if (l > k)
        throw ValidationError("p_value: l out of range");
    Count sum = 0;
    switch (alt) {
    case Alternative::Less:
        for (unsigned j = 0; j <= l; ++j)
            sum += table.count(j);
        break;
    case Alternative::Greater:
        for (unsigned j = l; j <= k; ++j)
            sum += table.count(j);
        break;
    case Alternative::TwoSided:
        // Counts share the denominator, so "no more likely" is a count
        // comparison. The subset sum can never exceed the total.
        for (unsigned j = 0; j <= k; ++j)
            if (table.count(j) <= table.count(l))
                sum += table.count(j);
        break;
    }
    return ExactProb(sum, table.total());
}

namespace {

Alternative flip(Alternative alt) {
    switch (alt) {
    case Alternative::Less: return Alternative::Greater;
    case Alternative::Greater: return Alternative::Less;
    case Alternative::TwoSided: return Alternative::TwoSided;
    }
    throw ValidationError("flip: unknown alternative");
}

} // namespace

TestReport run_test(std::span<const double> xs, std::span<const double> ys, unsigned k,
                    Alternative alt) {
    if (xs.empty() || ys.empty())
        throw ValidationError("run_test: both samples must be nonempty");
    for (double v : xs)
        if (!std::isfinite(v))
            throw ValidationError("run_test: non-finite value in the first sample");
    for (double v : ys)
        if (!std::isfinite(v))
            throw ValidationError("run_test: non-finite value in the second sample");

    const unsigned m = static_cast<unsigned>(xs.size());
    const unsigned n = static_cast<unsigned>(ys.size());
    if (k < 1 || k > std::min(m, n)) {
        std::ostringstream msg;
        msg << "run_test: require 1 <= k <= min(m, n) = " << std::min(m, n) << " (got k=" << k
            << ")";
        throw ValidationError(msg.str());
    }

    SampleSystem system{{xs.begin(), xs.end()}, {ys.begin(), ys.end()}};
    const unsigned observed = observed_l(system, k);

    // The PMF is parameterized with the smaller system first. When the
    // user's X side is larger, reflect: L on (m, n) equals k - L on (n, m),
    // and the alternative flips with it.
    const bool swapped = m > n;
    PMFTable table = swapped ? pmf(ComparisonSpec(n, m, k)) : pmf(ComparisonSpec(m, n, k));
    const unsigned effective_l = swapped ? k - observed : observed;
    const ExactProb p = p_value(table, effective_l, swapped ? flip(alt) : alt);

    return TestReport{m, n, k, observed, alt, p, swapped, std::move(table)};
}

std::vector<double> read_sample_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open sample file: " + path.string());

    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue; // blank
        if (line[first] == '#')
            continue; // comment
        const std::string token = line.substr(first);

        errno = 0;
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        bool ok = (end != token.c_str());
        if (ok)
            while (*end == ' ' || *end == '\t' || *end == '\r')
                ++end;
        if (!ok || *end != '\0' || errno == ERANGE || !std::isfinite(value)) {
            std::ostringstream msg;
            msg << path.string() << ":" << line_no << ": invalid sample value '"
                << line.substr(first) << "'";
            throw ValidationError(msg.str());
        }
        values.push_back(value);
    }
    return values;
}

} // namespace chaincmp
