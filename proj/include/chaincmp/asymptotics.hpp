#pragma once

#include <vector>

#include "chaincmp/counting.hpp"

namespace chaincmp {

// The PMF rescaled onto the unit interval: mass at l becomes density
// k * Pr(L = l) at x = l/k, so the grid Riemann sum (1/k) * sum(density)
// is exactly 1. Exact masses are kept alongside the double renderings.
struct DensityPoint {
    unsigned l;
    double x;       // l / k
    double density; // k * mass, as a double
    ExactProb mass; // Pr(L = l), exact
};

struct RescaledDensity {
    ComparisonSpec spec;
    std::vector<DensityPoint> points; // l = 0..k in order
};

RescaledDensity rescaled_pmf(const ComparisonSpec& spec);
RescaledDensity rescale_table(const PMFTable& table);

// Method-of-moments beta fit to the discrete law of x = L/k:
//   alpha = mu * (mu(1-mu)/v - 1),  beta = (1-mu) * (mu(1-mu)/v - 1)
// where mu, v are the exact mean and variance of x. mean/variance store
// those sample moments; the fitted distribution reproduces them by
// construction. Degenerate inputs (zero variance, or v >= mu(1-mu) as for
// any two-point law, so k = 1) are rejected.
struct BetaFit {
    double alpha;
    double beta_param;
    double mean;
    double variance;
};

BetaFit beta_moment_fit(const RescaledDensity& density);

// Beta(alpha, beta) density, for the comparison column in emitted tables.
// Diverges to +infinity at an endpoint when the matching shape is < 1.
double beta_pdf(double x, double alpha, double beta_param);

// Standard arcsine distribution (beta(1/2, 1/2)):
//   pdf 1/(pi*sqrt(x(1-x))), cdf (2/pi)*asin(sqrt(x)).
// The pdf at x in {0, 1} is reported as +infinity.
struct ArcsineValue {
    double pdf;
    double cdf;
};

ArcsineValue arcsine_reference(double x);

// For each k, the symmetric spec (2k, 2k, k): sup-norm distance on the
// l/k grid between the rescaled CDF and the arcsine CDF. Exploratory
// output only; nothing here asserts convergence.
struct SymmetricCaseRow {
    unsigned k;
    unsigned m;
    unsigned n;
    double sup_distance;
};

struct SymmetricCaseTable {
    std::vector<SymmetricCaseRow> rows; // strictly increasing in k
    bool sup_distance_nonincreasing;    // across the rows, as computed
};

SymmetricCaseTable symmetric_case_table(std::vector<unsigned> k_values);

} // namespace chaincmp
