#include "ctp/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "ctp/version.hpp"

namespace ctp {

namespace {

nlohmann::json summary_json(const SixNumberSummary& s) {
    return {{"min", s.min}, {"q1", s.q1},     {"median", s.median},
            {"mean", s.mean}, {"q3", s.q3},   {"max", s.max}};
}

nlohmann::json fit_json(const FitResult& fit) {
    nlohmann::json j;
    j["family"] = std::string(family_name(fit.family));
    j["alpha_hat"] = fit.alpha_hat;
    j["params_hat"] = fit.params_hat;
    j["loglik"] = fit.loglik;
    j["p"] = fit.p;
    j["aic"] = fit.aic;
    j["aicc"] = fit.aicc;
    j["bic"] = fit.bic;
    j["converged"] = fit.converged;
    j["boundary_active"] = fit.boundary_active;
    j["display"] = {{"negloglik", format_3dp(-fit.loglik)},
                    {"aic", format_3dp(fit.aic)},
                    {"aicc", format_3dp(fit.aicc)},
                    {"bic", format_3dp(fit.bic)}};
    return j;
}

nlohmann::json ranking_json(std::span<const FitResult> fits, Criterion c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ModelRank& r : rank_models(fits, c)) {
        arr.push_back({{"family", std::string(family_name(fits[r.fit_index].family))},
                       {"value", r.value},
                       {"rank", r.rank}});
    }
    return arr;
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string format_3dp(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

nlohmann::json make_fit_report(const DatasetDescriptor& dataset,
                               std::span<const FitResult> fits,
                               const FitConfig& config,
                               bool include_timestamp) {
    nlohmann::json j;
    j["dataset"] = {{"name", dataset.name},
                    {"n", dataset.n},
                    {"x0_hat", dataset.x0_hat},
                    {"summary", summary_json(dataset.summary)}};
    j["fits"] = nlohmann::json::array();
    for (const FitResult& f : fits) j["fits"].push_back(fit_json(f));
    j["rankings"] = {{"negloglik", ranking_json(fits, Criterion::negloglik)},
                     {"aic", ranking_json(fits, Criterion::aic)},
                     {"aicc", ranking_json(fits, Criterion::aicc)},
                     {"bic", ranking_json(fits, Criterion::bic)}};
    j["config"] = {{"n_starts", config.n_starts},
                   {"max_iterations", config.max_iterations},
                   {"tol_objective", config.tol_objective},
                   {"tol_params", config.tol_params},
                   {"seed", config.seed},
                   {"penalty_scale", config.penalty_scale},
                   {"parallel", config.parallel}};
    j["version"] = std::string(kVersion);
    if (include_timestamp) j["timestamp"] = iso8601_now();
    return j;
}

std::string format_comparison_table(std::span<const FitResult> fits) {
    // rank lookup per criterion, indexed by fit position
    std::vector<std::vector<std::size_t>> ranks(4, std::vector<std::size_t>(fits.size()));
    const Criterion order[4] = {Criterion::negloglik, Criterion::aic, Criterion::aicc,
                                Criterion::bic};
    for (int c = 0; c < 4; ++c) {
        for (const ModelRank& r : rank_models(fits, order[c])) {
            ranks[static_cast<std::size_t>(c)][r.fit_index] = r.rank;
        }
    }

    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %14s %14s %14s %14s\n", "Distribution", "-logL",
                  "AIC", "AICC", "BIC");
    out << line;
    for (std::size_t i = 0; i < fits.size(); ++i) {
        const FitResult& f = fits[i];
        auto cell = [&](double v, std::size_t rank) {
            char c[32];
            std::snprintf(c, sizeof c, "%.3f (%zu)", v, rank);
            return std::string(c);
        };
        std::snprintf(line, sizeof line, "%-12s %14s %14s %14s %14s\n",
                      std::string(family_label(f.family)).c_str(),
                      cell(-f.loglik, ranks[0][i]).c_str(), cell(f.aic, ranks[1][i]).c_str(),
                      cell(f.aicc, ranks[2][i]).c_str(), cell(f.bic, ranks[3][i]).c_str());
        out << line;
    }
    return out.str();
}

}  // namespace ctp
