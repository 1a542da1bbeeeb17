#include "chaincmp/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace chaincmp {

RescaledDensity rescale_table(const PMFTable& table) {
    const unsigned k = table.spec().k;
    RescaledDensity density{table.spec(), {}};
    density.points.reserve(k + 1);
    for (unsigned l = 0; l <= k; ++l) {
        const ExactProb& mass = table.prob(l);
        mpq_class scaled = mass.value() * k;
        density.points.push_back(DensityPoint{
            l,
            static_cast<double>(l) / static_cast<double>(k),
            scaled.get_d(),
            mass,
        });
    }
    return density;
}

RescaledDensity rescaled_pmf(const ComparisonSpec& spec) {
    return rescale_table(pmf(spec));
}

BetaFit beta_moment_fit(const RescaledDensity& density) {
    const unsigned k = density.spec.k;

    // Exact moments of x = l/k under the discrete law.
    mpq_class mean(0);
    mpq_class second(0);
    for (const DensityPoint& p : density.points) {
        mpq_class x(p.l, k);
        x.canonicalize();
        mean += x * p.mass.value();
        second += x * x * p.mass.value();
    }
    const mpq_class variance = second - mean * mean;
    if (variance <= 0)
        throw ValidationError("beta_moment_fit: zero variance, no fit exists");

    const mpq_class excess = mean * (1 - mean) / variance - 1;
    if (excess <= 0) {
        // v >= mu(1-mu): the law is at least as spread as a Bernoulli on
        // {0,1} (exactly so when k = 1) and no beta has such moments.
        throw ValidationError(
            "beta_moment_fit: variance too large for a beta law (needs k >= 2)");
    }

    const double mu = mean.get_d();
    const double v = variance.get_d();
    const double scale = excess.get_d();
    return BetaFit{mu * scale, (1.0 - mu) * scale, mu, v};
}

double beta_pdf(double x, double alpha, double beta_param) {
    if (x < 0.0 || x > 1.0)
        throw ValidationError("beta_pdf: x outside [0, 1]");
    if (x == 0.0)
        return alpha < 1.0 ? std::numeric_limits<double>::infinity()
                           : (alpha == 1.0 ? beta_param : 0.0);
    if (x == 1.0)
        return beta_param < 1.0 ? std::numeric_limits<double>::infinity()
                                : (beta_param == 1.0 ? alpha : 0.0);
    const double log_pdf = (alpha - 1.0) * std::log(x) + (beta_param - 1.0) * std::log1p(-x) -
                           (std::lgamma(alpha) + std::lgamma(beta_param) -
                            std::lgamma(alpha + beta_param));
    return std::exp(log_pdf);
}

ArcsineValue arcsine_reference(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << "arcsine_reference: x = " << x << " outside [0, 1]";
        throw ValidationError(msg.str());
    }
    ArcsineValue value;
    value.cdf = (2.0 / std::numbers::pi) * std::asin(std::sqrt(x));
    if (x == 0.0 || x == 1.0)
        value.pdf = std::numeric_limits<double>::infinity();
    else
        value.pdf = 1.0 / (std::numbers::pi * std::sqrt(x * (1.0 - x)));
    return value;
}

SymmetricCaseTable symmetric_case_table(std::vector<unsigned> k_values) {
    std::sort(k_values.begin(), k_values.end());
    k_values.erase(std::unique(k_values.begin(), k_values.end()), k_values.end());

    SymmetricCaseTable table{{}, true};
    double previous = std::numeric_limits<double>::infinity();
    for (unsigned k : k_values) {
        if (k < 1)
            throw ValidationError("symmetric_case_table: k values must be at least 1");
        const ComparisonSpec spec(2 * k, 2 * k, k);
        const PMFTable law = pmf(spec);

        double sup = 0.0;
        Count running = 0;
        for (unsigned l = 0; l <= k; ++l) {
            running += law.count(l);
            const double grid_cdf = ExactProb(running, law.total()).to_double();
            const double x = static_cast<double>(l) / static_cast<double>(k);
            sup = std::max(sup, std::abs(grid_cdf - arcsine_reference(x).cdf));
        }

        if (sup > previous)
            table.sup_distance_nonincreasing = false;
        previous = sup;
        table.rows.push_back(SymmetricCaseRow{k, 2 * k, 2 * k, sup});
    }
    return table;
}

} // namespace chaincmp
