#include "chaincmp/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace chaincmp {

std::string format_double(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

json pmf_json(const PMFTable& table) {
    json j;
    j["m"] = table.spec().m;
    j["n"] = table.spec().n;
    j["k"] = table.spec().k;
    j["total"] = table.total().get_str();
    json counts = json::object();
    json probs = json::object();
    for (const auto& [l, c] : table.counts())
        counts[std::to_string(l)] = c.get_str();
    for (const auto& [l, p] : table.probs())
        probs[std::to_string(l)] = p.to_fraction_string();
    j["counts"] = std::move(counts);
    j["probs"] = std::move(probs);
    return j;
}

std::string pmf_csv(const PMFTable& table, unsigned digits) {
    std::ostringstream out;
    out << "l,count,prob_exact,prob_decimal\n";
    for (const auto& [l, c] : table.counts()) {
        const ExactProb& p = table.prob(l);
        out << l << "," << c.get_str() << "," << p.to_fraction_string() << ","
            << p.to_decimal_string(digits) << "\n";
    }
    return out.str();
}

json histogram_json(const Histogram& hist) {
    json j = json::object();
    for (const auto& [l, c] : hist)
        j[std::to_string(l)] = c.get_str();
    return j;
}

json simulation_json(const SimulationResult& result) {
    json j;
    j["m"] = result.spec.m;
    j["n"] = result.spec.n;
    j["k"] = result.spec.k;
    j["total"] = std::to_string(result.trials);
    json counts = json::object();
    json probs = json::object();
    json freqs = json::object();
    for (const auto& [l, c] : result.counts) {
        counts[std::to_string(l)] = std::to_string(c);
        probs[std::to_string(l)] = ExactProb(Count(c), Count(result.trials)).to_fraction_string();
    }
    for (const auto& [l, f] : result.frequencies)
        freqs[std::to_string(l)] = f;
    j["counts"] = std::move(counts);
    j["probs"] = std::move(probs);
    j["freqs"] = std::move(freqs);
    j["trials"] = result.trials;
    j["dist"] = std::string(distribution_name(result.dist));
    j["seed"] = result.seed;
    j["ties_resampled"] = result.ties_resampled;
    return j;
}

std::string simulation_csv(const SimulationResult& result, unsigned digits) {
    std::ostringstream out;
    out << "l,count,prob_exact,prob_decimal\n";
    for (const auto& [l, c] : result.counts) {
        const ExactProb freq(Count(c), Count(result.trials));
        out << l << "," << c << "," << freq.to_fraction_string() << ","
            << freq.to_decimal_string(digits) << "\n";
    }
    return out.str();
}

json report_json(const TestReport& report, unsigned digits) {
    json j;
    j["m"] = report.m;
    j["n"] = report.n;
    j["k"] = report.k;
    j["observed_l"] = report.observed;
    j["alternative"] = std::string(alternative_name(report.alternative));
    j["p_value"] = report.p.to_fraction_string();
    j["p_value_decimal"] = report.p.to_decimal_string(digits);
    j["swapped"] = report.swapped;
    if (report.swapped)
        j["reduction"] = "null pmf computed on swapped sizes, read through l -> k - l";
    j["two_sided_convention"] = "minimum-likelihood";
    j["pmf"] = pmf_json(report.pmf_used);
    return j;
}

std::string density_csv(const RescaledDensity& density, const std::optional<BetaFit>& fit) {
    std::ostringstream out;
    out << "# m=" << density.spec.m << " n=" << density.spec.n << " k=" << density.spec.k
        << "\n";
    if (fit) {
        out << "# beta_fit alpha=" << format_double(fit->alpha)
            << " beta=" << format_double(fit->beta_param)
            << " mean=" << format_double(fit->mean)
            << " variance=" << format_double(fit->variance) << "\n";
    } else {
        out << "# beta_fit none (degenerate moments)\n";
    }
    out << "x,density,beta_fit_density,arcsine_density\n";
    const double nan = std::nan("");
    for (const DensityPoint& p : density.points) {
        const double beta_density = fit ? beta_pdf(p.x, fit->alpha, fit->beta_param) : nan;
        out << format_double(p.x) << "," << format_double(p.density) << ","
            << format_double(beta_density) << "," << format_double(arcsine_reference(p.x).pdf)
            << "\n";
    }
    return out.str();
}

json density_json(const RescaledDensity& density, const std::optional<BetaFit>& fit) {
    json j;
    j["m"] = density.spec.m;
    j["n"] = density.spec.n;
    j["k"] = density.spec.k;
    if (fit) {
        j["beta_fit"] = {{"alpha", fit->alpha},
                         {"beta", fit->beta_param},
                         {"mean", fit->mean},
                         {"variance", fit->variance}};
    } else {
        j["beta_fit"] = nullptr;
    }
    json points = json::array();
    const double nan = std::nan("");
    for (const DensityPoint& p : density.points) {
        json entry;
        entry["l"] = p.l;
        entry["x"] = p.x;
        entry["density"] = p.density;
        entry["mass"] = p.mass.to_fraction_string();
        entry["beta_fit_density"] =
            format_double(fit ? beta_pdf(p.x, fit->alpha, fit->beta_param) : nan);
        entry["arcsine_density"] = format_double(arcsine_reference(p.x).pdf);
        points.push_back(std::move(entry));
    }
    j["points"] = std::move(points);
    return j;
}

std::string symmetric_table_csv(const SymmetricCaseTable& table) {
    std::ostringstream out;
    out << "# sup_distance nonincreasing across k: "
        << (table.sup_distance_nonincreasing ? "yes" : "no") << "\n";
    out << "k,m,n,sup_distance\n";
    for (const SymmetricCaseRow& row : table.rows)
        out << row.k << "," << row.m << "," << row.n << "," << format_double(row.sup_distance)
            << "\n";
    return out.str();
}

json symmetric_table_json(const SymmetricCaseTable& table) {
    json j;
    json rows = json::array();
    for (const SymmetricCaseRow& row : table.rows) {
        rows.push_back({{"k", row.k},
                        {"m", row.m},
                        {"n", row.n},
                        {"sup_distance", row.sup_distance}});
    }
    j["rows"] = std::move(rows);
    j["sup_distance_nonincreasing"] = table.sup_distance_nonincreasing;
    return j;
}

} // namespace chaincmp
