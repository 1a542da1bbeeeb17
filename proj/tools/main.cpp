// chaincmp: exact comparison of the bottom-k order statistics of two
// samples, via lattice-path counting. Subcommands cover the exact PMF, the
// brute-force cross-check, the two-sample test, Monte Carlo validation, the
// random-walk view, and rescaled-density exploration.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaincmp/serialize.hpp"
#include "chaincmp/version.hpp"

namespace {

using namespace chaincmp;

enum class OutputFormat { Json, Csv, Human };

const std::map<std::string, OutputFormat> kFormatNames{
    {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"human", OutputFormat::Human}};

// A PMF resolved for the user's labeling. When the first system is larger
// the table is computed on the swapped sizes and read through l -> k - l.
struct EffectivePmf {
    unsigned m, n, k;
    bool swapped;
    PMFTable table;

    unsigned table_index(unsigned l) const { return swapped ? k - l : l; }
    const Count& count(unsigned l) const { return table.count(table_index(l)); }
    const ExactProb& prob(unsigned l) const { return table.prob(table_index(l)); }
};

EffectivePmf resolve_pmf(unsigned m, unsigned n, unsigned k, bool allow_swap) {
    if (m <= n)
        return EffectivePmf{m, n, k, false, pmf(ComparisonSpec(m, n, k))};
    if (!allow_swap)
        throw ValidationError("m > n: pass --allow-swap to compute via the reflected "
                              "parameterization (swapped sizes, l -> k - l)");
    return EffectivePmf{m, n, k, true, pmf(ComparisonSpec(n, m, k))};
}

constexpr const char* kSwapNote = "computed on swapped sizes via l -> k - l";

json effective_pmf_json(const EffectivePmf& e) {
    json j;
    j["m"] = e.m;
    j["n"] = e.n;
    j["k"] = e.k;
    j["total"] = e.table.total().get_str();
    json counts = json::object();
    json probs = json::object();
    for (unsigned l = 0; l <= e.k; ++l) {
        counts[std::to_string(l)] = e.count(l).get_str();
        probs[std::to_string(l)] = e.prob(l).to_fraction_string();
    }
    j["counts"] = std::move(counts);
    j["probs"] = std::move(probs);
    if (e.swapped) {
        j["swapped"] = true;
        j["reduction"] = kSwapNote;
    }
    return j;
}

void emit_json(const json& j) {
    std::cout << j.dump(2) << "\n";
}

void run_pmf(unsigned m, unsigned n, unsigned k, bool allow_swap, OutputFormat format,
             unsigned digits) {
    const EffectivePmf e = resolve_pmf(m, n, k, allow_swap);
    switch (format) {
    case OutputFormat::Json:
        emit_json(effective_pmf_json(e));
        break;
    case OutputFormat::Csv:
        if (e.swapped)
            std::cout << "# " << kSwapNote << "\n";
        std::cout << "l,count,prob_exact,prob_decimal\n";
        for (unsigned l = 0; l <= e.k; ++l)
            std::cout << l << "," << e.count(l).get_str() << ","
                      << e.prob(l).to_fraction_string() << ","
                      << e.prob(l).to_decimal_string(digits) << "\n";
        break;
    case OutputFormat::Human:
        std::cout << "PMF of L for m=" << e.m << " n=" << e.n << " k=" << e.k << " over "
                  << e.table.total().get_str() << " arrangements";
        if (e.swapped)
            std::cout << " (" << kSwapNote << ")";
        std::cout << "\n";
        for (unsigned l = 0; l <= e.k; ++l)
            std::cout << "  l=" << l << "  count=" << e.count(l).get_str() << "  prob="
                      << e.prob(l).to_fraction_string() << " = "
                      << e.prob(l).to_decimal_string(digits) << "\n";
        break;
    }
}

void run_enumerate(unsigned m, unsigned n, unsigned k, unsigned cap, OutputFormat format) {
    const Histogram enumerated = enumerate_exceedance_histogram(m, n, k, cap);
    const ComparisonSpec spec(m, n, k);

    bool match = true;
    std::map<unsigned, Count> closed;
    for (unsigned l = 0; l <= k; ++l) {
        closed[l] = count_k_exceedance(spec, l);
        if (closed[l] != enumerated.at(l))
            match = false;
    }

    switch (format) {
    case OutputFormat::Json: {
        json j;
        j["m"] = m;
        j["n"] = n;
        j["k"] = k;
        j["total"] = binomial(m + n, static_cast<long>(m)).get_str();
        j["counts"] = histogram_json(enumerated);
        j["closed_form"] = histogram_json(closed);
        j["match"] = match;
        emit_json(j);
        break;
    }
    case OutputFormat::Csv:
        std::cout << "l,enumerated,closed_form,match\n";
        for (unsigned l = 0; l <= k; ++l)
            std::cout << l << "," << enumerated.at(l).get_str() << "," << closed[l].get_str()
                      << "," << (enumerated.at(l) == closed[l] ? "true" : "false") << "\n";
        break;
    case OutputFormat::Human:
        std::cout << "Exceedance histogram for m=" << m << " n=" << n << " k=" << k << " ("
                  << binomial(m + n, static_cast<long>(m)).get_str() << " paths)\n";
        for (unsigned l = 0; l <= k; ++l)
            std::cout << "  l=" << l << "  enumerated=" << enumerated.at(l).get_str()
                      << "  closed_form=" << closed[l].get_str() << "\n";
        std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
        break;
    }

    if (!match)
        throw ConsistencyError("enumerate: closed form disagrees with enumeration");
}

void run_test_cmd(const std::string& x_file, const std::string& y_file, unsigned k,
                  const std::string& alternative, OutputFormat format, unsigned digits) {
    const std::vector<double> xs = read_sample_file(x_file);
    const std::vector<double> ys = read_sample_file(y_file);
    const TestReport report = run_test(xs, ys, k, parse_alternative(alternative));

    switch (format) {
    case OutputFormat::Json:
        emit_json(report_json(report, digits));
        break;
    case OutputFormat::Csv:
        throw ValidationError("test: csv output is not supported (use json or human)");
    case OutputFormat::Human:
        std::cout << "Exact two-sample comparison test\n";
        std::cout << "  m=" << report.m << " n=" << report.n << " k=" << report.k
                  << " observed_l=" << report.observed
                  << " alternative=" << alternative_name(report.alternative) << "\n";
        std::cout << "  p_value = " << report.p.to_fraction_string() << " = "
                  << report.p.to_decimal_string(digits) << "\n";
        if (report.swapped)
            std::cout << "  note: m > n, null pmf " << kSwapNote << "\n";
        std::cout << "  null pmf (m=" << report.pmf_used.spec().m
                  << ", n=" << report.pmf_used.spec().n << ", k=" << report.pmf_used.spec().k
                  << "):";
        for (const auto& [l, p] : report.pmf_used.probs())
            std::cout << " l=" << l << ":" << p.to_fraction_string();
        std::cout << "\n";
        break;
    }
}

void run_simulate(unsigned m, unsigned n, unsigned k, const std::string& dist_name,
                  std::uint64_t trials, std::uint64_t seed, unsigned threads, bool allow_swap,
                  OutputFormat format, unsigned digits) {
    const SourceDistribution dist = parse_distribution(dist_name);
    const EffectivePmf exact = resolve_pmf(m, n, k, allow_swap);

    SimulationResult sim = simulate_pmf(exact.table.spec(), dist, trials, seed, threads);
    // Present counts in the user's labeling.
    SimulationResult user = sim;
    if (exact.swapped) {
        user.counts.clear();
        user.frequencies.clear();
        for (unsigned l = 0; l <= k; ++l) {
            user.counts[l] = sim.counts.at(k - l);
            user.frequencies[l] = sim.frequencies.at(k - l);
        }
    }

    double max_dev = 0.0;
    for (unsigned l = 0; l <= k; ++l)
        max_dev = std::max(max_dev,
                           std::abs(user.frequencies.at(l) - exact.prob(l).to_double()));

    switch (format) {
    case OutputFormat::Json: {
        json j = simulation_json(user);
        j["m"] = m;
        j["n"] = n;
        json exact_probs = json::object();
        for (unsigned l = 0; l <= k; ++l)
            exact_probs[std::to_string(l)] = exact.prob(l).to_fraction_string();
        j["exact_probs"] = std::move(exact_probs);
        j["max_abs_deviation"] = max_dev;
        j["rng"] = std::string(kRngAlgorithm);
        if (exact.swapped) {
            j["swapped"] = true;
            j["reduction"] = kSwapNote;
        }
        emit_json(j);
        break;
    }
    case OutputFormat::Csv:
        std::cout << "# dist=" << distribution_name(dist) << " trials=" << trials
                  << " seed=" << seed << " rng=" << kRngAlgorithm
                  << " ties_resampled=" << user.ties_resampled
                  << " max_abs_deviation=" << format_double(max_dev) << "\n";
        if (exact.swapped)
            std::cout << "# " << kSwapNote << "\n";
        std::cout << simulation_csv(user, digits);
        break;
    case OutputFormat::Human:
        std::cout << "Simulated L for m=" << m << " n=" << n << " k=" << k
                  << ": dist=" << distribution_name(dist) << " trials=" << trials
                  << " seed=" << seed << " (rng " << kRngAlgorithm << ")\n";
        for (unsigned l = 0; l <= k; ++l)
            std::cout << "  l=" << l << "  count=" << user.counts.at(l)
                      << "  freq=" << format_double(user.frequencies.at(l)) << "  exact="
                      << exact.prob(l).to_fraction_string() << " = "
                      << exact.prob(l).to_decimal_string(digits) << "\n";
        std::cout << "ties_resampled=" << user.ties_resampled << "\n";
        std::cout << "max_abs_deviation=" << format_double(max_dev) << "\n";
        break;
    }
}

void run_walk(unsigned m, unsigned n, unsigned k, bool allow_swap, OutputFormat format,
              unsigned digits) {
    const EffectivePmf e = resolve_pmf(m, n, k, allow_swap);
    const int final_pos = static_cast<int>(m) - static_cast<int>(n);

    switch (format) {
    case OutputFormat::Json: {
        json j;
        j["m"] = e.m;
        j["n"] = e.n;
        j["k"] = e.k;
        j["final_position"] = final_pos;
        json probs = json::object();
        for (unsigned l = 0; l <= e.k; ++l)
            probs[std::to_string(2 * l)] = e.prob(l).to_fraction_string();
        j["probs"] = std::move(probs);
        if (e.swapped) {
            j["swapped"] = true;
            j["reduction"] = kSwapNote;
        }
        emit_json(j);
        break;
    }
    case OutputFormat::Csv:
        if (e.swapped)
            std::cout << "# " << kSwapNote << "\n";
        std::cout << "t,prob_exact,prob_decimal\n";
        for (unsigned l = 0; l <= e.k; ++l)
            std::cout << 2 * l << "," << e.prob(l).to_fraction_string() << ","
                      << e.prob(l).to_decimal_string(digits) << "\n";
        break;
    case OutputFormat::Human:
        std::cout << "Distribution of T_" << 2 * e.k << " (steps above the origin among the "
                  << "first " << 2 * e.k << ") for " << (m + n) << "-step walks to "
                  << final_pos << "\n";
        for (unsigned l = 0; l <= e.k; ++l)
            std::cout << "  T=" << 2 * l << "  prob=" << e.prob(l).to_fraction_string()
                      << " = " << e.prob(l).to_decimal_string(digits) << "\n";
        break;
    }
}

std::vector<unsigned> parse_k_list(const std::string& text) {
    std::vector<unsigned> ks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const unsigned long value = std::stoul(item, &used);
            if (used != item.size() || item.empty() || value < 1)
                throw std::invalid_argument(item);
            ks.push_back(static_cast<unsigned>(value));
        } catch (const std::exception&) {
            throw ValidationError("malformed --k-list entry '" + item +
                                  "' (expected positive integers separated by commas)");
        }
        pos = comma + 1;
    }
    return ks;
}

void run_asymptotics(const std::string& k_list, std::optional<unsigned> m,
                     std::optional<unsigned> n, std::optional<unsigned> k, bool allow_swap,
                     OutputFormat format) {
    if (!k_list.empty()) {
        const SymmetricCaseTable table = symmetric_case_table(parse_k_list(k_list));
        switch (format) {
        case OutputFormat::Json:
            emit_json(symmetric_table_json(table));
            break;
        case OutputFormat::Csv:
            std::cout << symmetric_table_csv(table);
            break;
        case OutputFormat::Human:
            std::cout << "Symmetric case (m = n = 2k): sup |rescaled CDF - arcsine CDF| on "
                         "the l/k grid\n";
            for (const SymmetricCaseRow& row : table.rows)
                std::cout << "  k=" << row.k << "  m=n=" << row.m
                          << "  sup_distance=" << format_double(row.sup_distance) << "\n";
            std::cout << "sup_distance nonincreasing across k: "
                      << (table.sup_distance_nonincreasing ? "yes" : "no") << "\n";
            break;
        }
        return;
    }

    if (!m || !n || !k)
        throw ValidationError("asymptotics: pass either --k-list or all of --m --n --k");

    const EffectivePmf e = resolve_pmf(*m, *n, *k, allow_swap);
    RescaledDensity density{ComparisonSpec(e.table.spec()), {}};
    if (e.swapped) {
        density.points.reserve(e.k + 1);
        for (unsigned l = 0; l <= e.k; ++l) {
            const ExactProb& mass = e.prob(l);
            mpq_class scaled = mass.value() * e.k;
            density.points.push_back(DensityPoint{
                l, static_cast<double>(l) / static_cast<double>(e.k), scaled.get_d(), mass});
        }
    } else {
        density = rescale_table(e.table);
    }

    std::optional<BetaFit> fit;
    try {
        fit = beta_moment_fit(density);
    } catch (const ValidationError&) {
        fit = std::nullopt; // degenerate moments; columns render as nan
    }

    switch (format) {
    case OutputFormat::Json: {
        json j = density_json(density, fit);
        if (e.swapped) {
            j["m"] = e.m;
            j["n"] = e.n;
            j["swapped"] = true;
            j["reduction"] = kSwapNote;
        }
        emit_json(j);
        break;
    }
    case OutputFormat::Csv:
        if (e.swapped) {
            // The rows are in the user's labeling; emit metadata to match
            // instead of the library header, which would name the swapped
            // spec the table was computed on.
            std::cout << "# m=" << e.m << " n=" << e.n << " k=" << e.k << " (" << kSwapNote
                      << ")\n";
            if (fit)
                std::cout << "# beta_fit alpha=" << format_double(fit->alpha)
                          << " beta=" << format_double(fit->beta_param)
                          << " mean=" << format_double(fit->mean)
                          << " variance=" << format_double(fit->variance) << "\n";
            else
                std::cout << "# beta_fit none (degenerate moments)\n";
            std::cout << "x,density,beta_fit_density,arcsine_density\n";
            for (const DensityPoint& p : density.points) {
                const double beta_density =
                    fit ? beta_pdf(p.x, fit->alpha, fit->beta_param) : std::nan("");
                std::cout << format_double(p.x) << "," << format_double(p.density) << ","
                          << format_double(beta_density) << ","
                          << format_double(arcsine_reference(p.x).pdf) << "\n";
            }
        } else {
            std::cout << density_csv(density, fit);
        }
        break;
    case OutputFormat::Human:
        std::cout << "Rescaled PMF for m=" << e.m << " n=" << e.n << " k=" << e.k
                  << " (density k*Pr(L=l) at x=l/k)\n";
        if (fit)
            std::cout << "  beta fit: alpha=" << format_double(fit->alpha)
                      << " beta=" << format_double(fit->beta_param) << "\n";
        else
            std::cout << "  beta fit: none (degenerate moments)\n";
        for (const DensityPoint& p : density.points)
            std::cout << "  x=" << format_double(p.x) << "  density=" << format_double(p.density)
                      << "  mass=" << p.mass.to_fraction_string() << "\n";
        break;
    }
}

} // namespace

// Per-subcommand option storage; every subcommand owns its variables so
// defaults applied at registration time cannot leak across commands.
struct CommonOpts {
    OutputFormat format = OutputFormat::Human;
    unsigned digits = 12;
    unsigned m = 0, n = 0, k = 0;
    bool allow_swap = false;
};

void add_format_options(CLI::App* cmd, CommonOpts& opts, const char* default_format) {
    cmd->add_option("--format", opts.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->default_val(default_format);
    cmd->add_option("--digits", opts.digits, "Fractional digits for decimal renderings")
        ->default_val(12);
}

void add_spec_options(CLI::App* cmd, CommonOpts& opts, bool with_swap) {
    cmd->add_option("--m", opts.m, "Size of system X")->required();
    cmd->add_option("--n", opts.n, "Size of system Y")->required();
    cmd->add_option("--k", opts.k, "Number of pairwise comparisons")->required();
    if (with_swap)
        cmd->add_flag("--allow-swap", opts.allow_swap,
                      "Accept m > n via the reflected parameterization");
}

int main(int argc, char** argv) {
    CLI::App app{"Exact distribution of pairwise wins among the bottom-k order statistics "
                 "of two samples, with brute-force, Monte Carlo, and inference tooling"};
    app.set_version_flag("--version", std::string("chaincmp ") + std::string(kVersion) +
                                          " (rng: " + std::string(kRngAlgorithm) + ")");
    app.require_subcommand(1);

    CLI::App* pmf_cmd = app.add_subcommand("pmf", "Exact PMF of the comparison statistic L");
    CommonOpts pmf_opts;
    add_format_options(pmf_cmd, pmf_opts, "human");
    add_spec_options(pmf_cmd, pmf_opts, true);
    pmf_cmd->callback([&] {
        run_pmf(pmf_opts.m, pmf_opts.n, pmf_opts.k, pmf_opts.allow_swap, pmf_opts.format,
                pmf_opts.digits);
    });

    CLI::App* enum_cmd = app.add_subcommand(
        "enumerate", "Brute-force histogram of L with closed-form cross-check");
    CommonOpts enum_opts;
    unsigned cap = kDefaultEnumerationCap;
    add_format_options(enum_cmd, enum_opts, "human");
    add_spec_options(enum_cmd, enum_opts, false);
    enum_cmd->add_option("--cap", cap, "Enumeration cap on m+n")
        ->envname("EXCEEDANCE_ENUM_CAP")
        ->default_val(kDefaultEnumerationCap);
    enum_cmd->callback(
        [&] { run_enumerate(enum_opts.m, enum_opts.n, enum_opts.k, cap, enum_opts.format); });

    CLI::App* test_cmd =
        app.add_subcommand("test", "Exact nonparametric two-sample test from sample files");
    CommonOpts test_opts;
    std::string x_file, y_file, alternative;
    add_format_options(test_cmd, test_opts, "human");
    test_cmd->add_option("--x-file", x_file, "File with one X value per line")->required();
    test_cmd->add_option("--y-file", y_file, "File with one Y value per line")->required();
    test_cmd->add_option("--k", test_opts.k, "Number of pairwise comparisons")->required();
    test_cmd->add_option("--alternative", alternative, "less, greater, or two_sided")
        ->default_val("greater");
    test_cmd->callback([&] {
        run_test_cmd(x_file, y_file, test_opts.k, alternative, test_opts.format,
                     test_opts.digits);
    });

    CLI::App* sim_cmd =
        app.add_subcommand("simulate", "Monte Carlo check of the PMF under a chosen source");
    CommonOpts sim_opts;
    std::string dist_name;
    std::uint64_t trials = 100000, seed = 0;
    unsigned threads = 0;
    add_format_options(sim_cmd, sim_opts, "human");
    add_spec_options(sim_cmd, sim_opts, true);
    sim_cmd->add_option("--dist", dist_name, "uniform, exponential, normal, or pareto")
        ->default_val("uniform");
    sim_cmd->add_option("--trials", trials, "Number of simulated experiments")
        ->default_val(100000);
    sim_cmd->add_option("--seed", seed, "RNG seed")->default_val(0);
    sim_cmd->add_option("--threads", threads, "Worker lanes (0 = auto; result is identical)")
        ->default_val(0);
    sim_cmd->callback([&] {
        run_simulate(sim_opts.m, sim_opts.n, sim_opts.k, dist_name, trials, seed, threads,
                     sim_opts.allow_swap, sim_opts.format, sim_opts.digits);
    });

    CLI::App* walk_cmd = app.add_subcommand(
        "walk", "The same distribution as the time a walk spends above the origin");
    CommonOpts walk_opts;
    add_format_options(walk_cmd, walk_opts, "human");
    add_spec_options(walk_cmd, walk_opts, true);
    walk_cmd->callback([&] {
        run_walk(walk_opts.m, walk_opts.n, walk_opts.k, walk_opts.allow_swap, walk_opts.format,
                 walk_opts.digits);
    });

    CLI::App* asym_cmd = app.add_subcommand(
        "asymptotics", "Rescaled densities, beta moment fits, arcsine comparison");
    std::string k_list;
    std::optional<unsigned> am, an, ak;
    bool asym_swap = false;
    OutputFormat asym_format = OutputFormat::Csv;
    asym_cmd->add_option("--format", asym_format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
        ->default_val("csv");
    asym_cmd->add_option("--k-list", k_list,
                         "Comma-separated k values for the symmetric (2k,2k,k) table");
    asym_cmd->add_option("--m", am, "Size of system X");
    asym_cmd->add_option("--n", an, "Size of system Y");
    asym_cmd->add_option("--k", ak, "Number of pairwise comparisons");
    asym_cmd->add_flag("--allow-swap", asym_swap,
                       "Accept m > n via the reflected parameterization");
    asym_cmd->callback([&] { run_asymptotics(k_list, am, an, ak, asym_swap, asym_format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const TieError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
