#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctp/csv.hpp"
#include "ctp/distribution.hpp"
#include "ctp/estimation.hpp"
#include "ctp/report.hpp"
#include "ctp/stats.hpp"
#include "ctp/version.hpp"
#include "ctp/wheaton.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotConverged = 2;

struct DataOptions {
    std::string source;  // "wheaton" or a file path
    std::size_t column = 0;
    std::string delimiter = ",";
    bool header = false;
    std::optional<long> filter_year;
    std::size_t year_column = 1;
};

struct FitOptions {
    std::size_t starts = 200;
    std::size_t max_iter = 2000;
    std::uint64_t seed = 42;
    bool serial = false;
};

void add_data_options(CLI::App* cmd, DataOptions& opts) {
    cmd->add_option("--data", opts.source, "dataset: 'wheaton' or a CSV/text file path")
        ->required();
    cmd->add_option("--column", opts.column, "0-based column index (file input)");
    cmd->add_option("--delimiter", opts.delimiter, "cell delimiter (default ',')");
    cmd->add_flag("--header", opts.header, "skip the first non-blank line");
    cmd->add_option("--filter-year", opts.filter_year, "keep only rows matching this year");
    cmd->add_option("--year-column", opts.year_column, "0-based year column for --filter-year");
}

void add_fit_options(CLI::App* cmd, FitOptions& opts) {
    cmd->add_option("--starts", opts.starts, "number of optimizer starts per family");
    cmd->add_option("--max-iter", opts.max_iter, "simplex iteration cap per start");
    cmd->add_option("--seed", opts.seed, "seed for the start sampler");
    cmd->add_flag("--serial", opts.serial, "run optimizer starts on one thread");
}

ctp::FitConfig to_config(const FitOptions& opts) {
    ctp::FitConfig cfg;
    cfg.n_starts = opts.starts;
    cfg.max_iterations = opts.max_iter;
    cfg.seed = opts.seed;
    cfg.parallel = !opts.serial;
    return cfg;
}

std::vector<double> load_values(const DataOptions& opts) {
    if (opts.source == "wheaton") return ctp::wheaton_river();
    ctp::CsvOptions csv;
    csv.column = opts.column;
    if (opts.delimiter.size() != 1) {
        throw std::invalid_argument("--delimiter must be a single character");
    }
    csv.delimiter = opts.delimiter[0];
    csv.has_header = opts.header;
    csv.filter_year = opts.filter_year;
    csv.year_column = opts.year_column;
    return ctp::read_numeric_column(opts.source, csv);
}

ctp::FamilyId parse_family_or_throw(const std::string& name) {
    const auto id = ctp::parse_family(name);
    if (!id) {
        throw std::invalid_argument("unknown family '" + name +
                                    "' (expected one of g mg a ma r18a mr18a r18b mr18b "
                                    "r19 mr19 r23 tp pareto)");
    }
    return *id;
}

void write_json(const nlohmann::json& j, const std::string& dest) {
    if (dest == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(dest);
    if (!out) throw std::runtime_error("cannot write " + dest);
    out << j.dump(2) << "\n";
}

ctp::DatasetDescriptor describe_dataset(const std::string& name,
                                        const std::vector<double>& values) {
    ctp::DatasetDescriptor d;
    d.name = name;
    d.n = values.size();
    d.x0_hat = *std::min_element(values.begin(), values.end());
    d.summary = ctp::describe(values);
    return d;
}

int run_describe(const DataOptions& data) {
    const auto values = load_values(data);
    const ctp::SixNumberSummary s = ctp::describe(values);
    std::printf("n      %zu\n", values.size());
    std::printf("min    %.6g\n", s.min);
    std::printf("q1     %.6g\n", s.q1);
    std::printf("median %.6g\n", s.median);
    std::printf("mean   %.6g\n", s.mean);
    std::printf("q3     %.6g\n", s.q3);
    std::printf("max    %.6g\n", s.max);
    return kExitOk;
}

int run_fit(const DataOptions& data, const FitOptions& fit_opts, const std::string& family_name,
            const std::string& json_dest, bool no_timestamp) {
    const auto values = load_values(data);
    const ctp::Sample sample(values);
    const ctp::FamilyId family = parse_family_or_throw(family_name);
    const ctp::FitConfig cfg = to_config(fit_opts);
    const ctp::FitResult result = ctp::fit(family, sample, cfg);

    std::printf("family          %s\n", std::string(ctp::family_label(result.family)).c_str());
    std::printf("x0_hat          %.17g\n", result.x0_hat);
    std::printf("alpha_hat       %.17g\n", result.alpha_hat);
    for (std::size_t i = 0; i < result.params_hat.size(); ++i) {
        std::printf("lambda_hat[%zu]   %.17g\n", i, result.params_hat[i]);
    }
    std::printf("-logL           %.3f\n", -result.loglik);
    std::printf("AIC             %.3f\n", result.aic);
    std::printf("AICC            %.3f\n", result.aicc);
    std::printf("BIC             %.3f\n", result.bic);
    std::printf("converged       %s\n", result.converged ? "yes" : "no");
    std::printf("boundary_active %s\n", result.boundary_active ? "yes" : "no");

    if (!json_dest.empty()) {
        const auto report = ctp::make_fit_report(describe_dataset(data.source, values),
                                                 {&result, 1}, cfg, !no_timestamp);
        write_json(report, json_dest);
    }
    return result.converged ? kExitOk : kExitNotConverged;
}

int run_compare(const DataOptions& data, const FitOptions& fit_opts, const std::string& set_name,
                const std::vector<std::string>& family_names, const std::string& json_dest,
                bool no_timestamp) {
    std::vector<ctp::FamilyId> families;
    if (!set_name.empty()) {
        if (set_name == "original") {
            const auto s = ctp::original_set();
            families.assign(s.begin(), s.end());
        } else if (set_name == "modified") {
            const auto s = ctp::modified_set();
            families.assign(s.begin(), s.end());
        } else {
            throw std::invalid_argument("--set must be 'original' or 'modified'");
        }
    } else {
        for (const std::string& name : family_names) {
            families.push_back(parse_family_or_throw(name));
        }
    }
    if (families.size() < 2) {
        throw std::invalid_argument("compare needs at least 2 families");
    }

    const auto values = load_values(data);
    const ctp::Sample sample(values);
    const ctp::FitConfig cfg = to_config(fit_opts);

    std::vector<ctp::FitResult> fits;
    std::vector<std::pair<std::string, std::string>> failures;  // family, message
    for (ctp::FamilyId family : families) {
        try {
            fits.push_back(ctp::fit(family, sample, cfg));
        } catch (const std::exception& e) {
            failures.emplace_back(std::string(ctp::family_name(family)), e.what());
        }
    }
    if (fits.empty()) {
        throw std::runtime_error("every requested family failed to fit");
    }

    std::fputs(ctp::format_comparison_table(fits).c_str(), stdout);
    for (const auto& [family, message] : failures) {
        std::printf("%-12s FAILED: %s\n", family.c_str(), message.c_str());
    }

    if (!json_dest.empty()) {
        auto report = ctp::make_fit_report(describe_dataset(data.source, values), fits, cfg,
                                           !no_timestamp);
        for (const auto& [family, message] : failures) {
            report["fits"].push_back({{"family", family}, {"error", message}});
        }
        write_json(report, json_dest);
    }

    const bool all_converged = failures.empty() &&
                               std::all_of(fits.begin(), fits.end(),
                                           [](const ctp::FitResult& f) { return f.converged; });
    return all_converged ? kExitOk : kExitNotConverged;
}

int run_validate(double delta1, double delta2) {
    const ctp::DeltaCoefficients delta(delta1, delta2);
    const ctp::ValidityCertificate cert = ctp::validity_check(delta);
    std::printf("delta     (%.17g, %.17g, %.17g)\n", delta.delta1, delta.delta2, delta.delta3());
    std::printf("min r(t)  %.17g\n", cert.min_value);
    std::printf("argmin t  %.17g\n", cert.argmin_t);
    std::printf("verdict   %s\n", cert.is_valid ? "valid" : "invalid");
    return kExitOk;
}

ctp::CtpDistribution make_distribution(const std::string& family_name,
                                       const std::vector<double>& params, double alpha, double x0,
                                       bool allow_invalid) {
    const ctp::FamilyId family = parse_family_or_throw(family_name);
    const ctp::DeltaCoefficients delta = ctp::to_delta(family, params);
    const ctp::ParetoBase base(x0, alpha);
    if (allow_invalid) return ctp::CtpDistribution::unchecked(base, delta);
    const ctp::ValidityCertificate cert = ctp::validity_check(delta);
    if (!cert.is_valid) {
        std::fprintf(stderr,
                     "invalid parameters: min r(t) = %.17g at t = %.17g (verdict: invalid)\n",
                     cert.min_value, cert.argmin_t);
        throw std::invalid_argument("parameters do not define a distribution");
    }
    return ctp::CtpDistribution::checked(base, delta);
}

int run_sample(const std::string& family_name, const std::vector<double>& params, double alpha,
               double x0, std::size_t n, std::uint64_t seed) {
    const auto dist = make_distribution(family_name, params, alpha, x0, false);
    for (double x : dist.sample(n, seed)) std::printf("%.17g\n", x);
    return kExitOk;
}

int run_curve(const DataOptions& data, const FitOptions& fit_opts, bool have_data,
              const std::string& family_name, const std::vector<double>& params, double alpha,
              double x0, bool unchecked, const std::string& what, double from, double to,
              std::size_t steps) {
    if (steps < 2) throw std::invalid_argument("--steps must be >= 2");
    if (!(from < to)) throw std::invalid_argument("--from must be below --to");

    std::optional<ctp::CtpDistribution> dist;
    if (have_data) {
        const auto values = load_values(data);
        const ctp::Sample sample(values);
        const ctp::FitResult fitted =
            ctp::fit(parse_family_or_throw(family_name), sample, to_config(fit_opts));
        dist = ctp::CtpDistribution::checked(
            ctp::ParetoBase(fitted.x0_hat, fitted.alpha_hat),
            ctp::to_delta(fitted.family, fitted.params_hat));
    } else {
        dist = make_distribution(family_name, params, alpha, x0, unchecked);
    }

    double (ctp::CtpDistribution::*eval)(double) const = nullptr;
    if (what == "pdf") {
        eval = &ctp::CtpDistribution::pdf;
    } else if (what == "cdf") {
        eval = &ctp::CtpDistribution::cdf;
    } else if (what == "survival") {
        eval = &ctp::CtpDistribution::survival;
    } else if (what == "hazard") {
        eval = &ctp::CtpDistribution::hazard;
    } else {
        throw std::invalid_argument("--what must be pdf, cdf, survival or hazard");
    }

    const double step = (to - from) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        const double x = (i + 1 == steps) ? to : from + static_cast<double>(i) * step;
        std::printf("%.17g\t%.17g\n", x, ((*dist).*eval)(x));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic-transmuted Pareto distributions: evaluation, fitting, model comparison"};
    app.set_version_flag("--version", std::string(ctp::kVersion));
    app.require_subcommand(1);

    DataOptions data;
    FitOptions fit_opts;
    std::string family;
    std::vector<double> params;
    double alpha = 1.0;
    double x0 = 1.0;
    std::string json_dest;
    bool no_timestamp = false;

    CLI::App* describe_cmd = app.add_subcommand("describe", "six-number summary of a dataset");
    add_data_options(describe_cmd, data);

    CLI::App* fit_cmd = app.add_subcommand("fit", "constrained maximum-likelihood fit");
    add_data_options(fit_cmd, data);
    add_fit_options(fit_cmd, fit_opts);
    fit_cmd->add_option("--family", family, "family id")->required();
    fit_cmd->add_option("--json", json_dest, "write JSON report to this path ('-' = stdout)");
    fit_cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the report");

    CLI::App* compare_cmd = app.add_subcommand("compare", "fit several families and rank them");
    add_data_options(compare_cmd, data);
    add_fit_options(compare_cmd, fit_opts);
    std::string set_name;
    std::vector<std::string> family_list;
    compare_cmd->add_option("--set", set_name, "family set: 'original' or 'modified'");
    compare_cmd->add_option("--families", family_list, "explicit family ids")->delimiter(',');
    compare_cmd->add_option("--json", json_dest, "write JSON report to this path ('-' = stdout)");
    compare_cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the report");

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check whether (delta1, delta2) defines a distribution");
    double delta1 = 0.0, delta2 = 0.0;
    validate_cmd->add_option("delta1", delta1)->required();
    validate_cmd->add_option("delta2", delta2)->required();

    CLI::App* sample_cmd = app.add_subcommand("sample", "inverse-transform draws, one per line");
    sample_cmd->add_option("--family", family, "family id")->required();
    sample_cmd->add_option("--params", params, "family parameters")->delimiter(',');
    sample_cmd->add_option("--alpha", alpha, "Pareto shape")->required();
    sample_cmd->add_option("--x0", x0, "Pareto scale")->required();
    std::size_t n_draws = 0;
    std::uint64_t sample_seed = 42;
    sample_cmd->add_option("-n,--count", n_draws, "number of draws")->required();
    sample_cmd->add_option("--seed", sample_seed, "RNG seed");

    CLI::App* curve_cmd =
        app.add_subcommand("curve", "tab-separated (x, value) grid of pdf/cdf/survival/hazard");
    add_data_options(curve_cmd, data);
    curve_cmd->get_option("--data")->required(false);
    add_fit_options(curve_cmd, fit_opts);
    curve_cmd->add_option("--family", family, "family id")->required();
    curve_cmd->add_option("--params", params, "family parameters (explicit distribution)")
        ->delimiter(',');
    curve_cmd->add_option("--alpha", alpha, "Pareto shape (explicit distribution)");
    curve_cmd->add_option("--x0", x0, "Pareto scale (explicit distribution)");
    bool unchecked = false;
    curve_cmd->add_flag("--unchecked", unchecked,
                        "evaluate the raw polynomials even for invalid parameters");
    std::string what = "pdf";
    double from = 1.0, to = 10.0;
    std::size_t steps = 200;
    curve_cmd->add_option("--what", what, "pdf|cdf|survival|hazard")->required();
    curve_cmd->add_option("--from", from, "grid start")->required();
    curve_cmd->add_option("--to", to, "grid end")->required();
    curve_cmd->add_option("--steps", steps, "number of grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(describe_cmd)) return run_describe(data);
        if (app.got_subcommand(fit_cmd)) {
            return run_fit(data, fit_opts, family, json_dest, no_timestamp);
        }
        if (app.got_subcommand(compare_cmd)) {
            return run_compare(data, fit_opts, set_name, family_list, json_dest, no_timestamp);
        }
        if (app.got_subcommand(validate_cmd)) return run_validate(delta1, delta2);
        if (app.got_subcommand(sample_cmd)) {
            return run_sample(family, params, alpha, x0, n_draws, sample_seed);
        }
        if (app.got_subcommand(curve_cmd)) {
            return run_curve(data, fit_opts, !data.source.empty(), family, params, alpha, x0,
                             unchecked, what, from, to, steps);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    return kExitInputError;
}
