#include "ctp/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ctp/simplex.hpp"

namespace ctp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kBoundaryTol = 1e-6;
constexpr double kRankTie = 1e-6;

double uniform01(std::mt19937_64& eng) {
    return std::ldexp(static_cast<double>(eng() >> 11), -53);
}

double criterion_value(const FitResult& fit, Criterion c) {
    switch (c) {
        case Criterion::negloglik: return -fit.loglik;
        case Criterion::aic: return fit.aic;
        case Criterion::aicc: return fit.aicc;
        case Criterion::bic: return fit.bic;
    }
    throw std::logic_error("unknown criterion");
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw std::invalid_argument("Sample: need at least 2 observations");
    }
    double min_value = values_.front();
    for (double v : values_) {
        if (!(std::isfinite(v) && v > 0.0)) {
            throw std::invalid_argument("Sample: values must be positive and finite");
        }
        min_value = std::min(min_value, v);
    }
    x0_hat_ = min_value;
    log_ratios_.reserve(values_.size());
    const double log_x0 = std::log(x0_hat_);
    for (double v : values_) {
        const double lv = std::log(v);
        sum_log_ += lv;
        log_ratios_.push_back(lv - log_x0);
    }
}

double log_likelihood(FamilyId family, double alpha, const FamilyParams& params,
                      const Sample& sample) {
    const FamilyInfo& info = family_info(family);
    if (params.size() != info.dimension) {
        throw std::invalid_argument("log_likelihood: parameter dimension mismatch");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) return kNegInf;

    const DeltaCoefficients delta = to_delta(family, params);
    if (!validity_check(delta).is_valid) return kNegInf;

    const double d1 = delta.delta1;
    const double d2 = delta.delta2;
    const double p0 = 3.0 - 2.0 * d1 - d2;
    const double p1 = 6.0 * d1 + 4.0 * d2 - 6.0;
    const double p2 = 3.0 - 3.0 * d1 - 3.0 * d2;

    const double n = static_cast<double>(sample.n());
    double ll = n * std::log(alpha) + n * alpha * std::log(sample.x0_hat()) -
                (alpha + 1.0) * sample.sum_log();
    for (double lr : sample.log_ratios()) {
        const double u = std::exp(-alpha * lr);
        const double term = p0 + u * (p1 + u * p2);
        if (!(term > 0.0)) return kNegInf;
        ll += std::log(term);
    }
    return ll;
}

double pareto_alpha_closed_form(const Sample& sample) {
    double total = 0.0;
    for (double lr : sample.log_ratios()) total += lr;
    if (!(total > 0.0)) {
        throw std::domain_error("pareto_alpha_closed_form: all values equal the minimum");
    }
    return static_cast<double>(sample.n()) / total;
}

CriteriaValues criteria(double loglik, std::size_t p, std::size_t n) {
    if (n <= p + 1) {
        throw std::domain_error("criteria: need n > p + 1");
    }
    const double pd = static_cast<double>(p);
    const double nd = static_cast<double>(n);
    CriteriaValues out;
    out.aic = -2.0 * loglik + 2.0 * pd;
    out.aicc = out.aic + 2.0 * pd * (pd + 1.0) / (nd - pd - 1.0);
    out.bic = -2.0 * loglik + pd * std::log(nd);
    return out;
}

FitResult fit(FamilyId family, const Sample& sample, const FitConfig& config) {
    const FamilyInfo& info = family_info(family);
    const std::size_t dim = 1 + info.dimension;  // alpha plus the lambda block

    // Penalized objective over theta = (alpha, lambda...): outside the
    // region or validity set the value is penalty_scale*(1 + distance),
    // which dwarfs any feasible -loglik and slopes back toward feasibility.
    auto objective = [&](std::span<const double> theta) -> double {
        const double alpha = theta[0];
        double viol = 0.0;
        if (!(alpha > 0.0)) viol += 1e-8 - alpha;
        const std::span<const double> lambda = theta.subspan(1);
        viol += info.region.violation(lambda);
        if (viol > 0.0) return config.penalty_scale * (1.0 + viol);

        const FamilyParams params(lambda.begin(), lambda.end());
        const DeltaCoefficients delta = to_delta(family, params);
        const ValidityCertificate cert = validity_check(delta);
        if (!cert.is_valid) return config.penalty_scale * (1.0 - cert.min_value);

        const double ll = log_likelihood(family, alpha, params, sample);
        if (!std::isfinite(ll)) return config.penalty_scale;  // zero pdf term at a boundary delta
        return -ll;
    };

    // Deterministic start: closed-form Pareto alpha at the identity point,
    // then seeded draws over the feasible region with log-uniform alpha.
    const double alpha0 = pareto_alpha_closed_form(sample);
    std::vector<std::vector<double>> starts;
    starts.reserve(config.n_starts);
    {
        std::vector<double> det(dim);
        det[0] = alpha0;
        std::copy(info.identity.begin(), info.identity.end(), det.begin() + 1);
        starts.push_back(std::move(det));
    }
    if (config.n_starts > 1) {
        const auto points = region_sample(family, config.n_starts - 1, config.seed);
        std::mt19937_64 alpha_eng(config.seed ^ 0x9e3779b97f4a7c15ULL);
        const double log_span = std::log(8.0);
        for (const FamilyParams& p : points) {
            std::vector<double> s(dim);
            s[0] = alpha0 * std::exp(log_span * (2.0 * uniform01(alpha_eng) - 1.0));
            std::copy(p.begin(), p.end(), s.begin() + 1);
            starts.push_back(std::move(s));
        }
    }

    SimplexOptions options;
    options.max_iterations = config.max_iterations;
    options.tol_objective = config.tol_objective;
    options.tol_params = config.tol_params;

    std::vector<SimplexResult> results(starts.size());
    const std::ptrdiff_t n_starts = static_cast<std::ptrdiff_t>(starts.size());
#pragma omp parallel for schedule(dynamic) if (config.parallel)
    for (std::ptrdiff_t i = 0; i < n_starts; ++i) {
        results[static_cast<std::size_t>(i)] =
            minimize_simplex(objective, starts[static_cast<std::size_t>(i)], options);
    }

    // fixed-order reduction so the result does not depend on interleaving
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].fx < results[best].fx) best = i;
    }
    const SimplexResult& winner = results[best];
    if (winner.fx >= config.penalty_scale) {
        throw std::logic_error("fit: no start reached the feasible region");
    }

    FitResult out;
    out.family = family;
    out.alpha_hat = winner.x[0];
    out.params_hat.assign(winner.x.begin() + 1, winner.x.end());
    out.x0_hat = sample.x0_hat();
    out.loglik = -winner.fx;
    out.p = dim;
    const CriteriaValues c = criteria(out.loglik, out.p, sample.n());
    out.aic = c.aic;
    out.aicc = c.aicc;
    out.bic = c.bic;
    out.converged = winner.converged;
    out.n_starts_used = starts.size();

    out.boundary_active = false;
    const ParamRegion& region = info.region;
    for (std::size_t i = 0; i < region.normals.size(); ++i) {
        double dot = 0.0;
        for (std::size_t j = 0; j < region.normals[i].size(); ++j) {
            dot += region.normals[i][j] * out.params_hat[j];
        }
        if (std::abs(dot - region.bounds[i]) <= kBoundaryTol) {
            out.boundary_active = true;
            break;
        }
    }

    if (!region_contains(family, out.params_hat) ||
        !validity_check(to_delta(family, out.params_hat)).is_valid) {
        throw std::logic_error("fit: terminal point escaped the feasible region");
    }
    return out;
}

std::optional<Criterion> parse_criterion(std::string_view name) {
    if (name == "negloglik") return Criterion::negloglik;
    if (name == "aic") return Criterion::aic;
    if (name == "aicc") return Criterion::aicc;
    if (name == "bic") return Criterion::bic;
    return std::nullopt;
}

std::string_view criterion_name(Criterion c) {
    switch (c) {
        case Criterion::negloglik: return "negloglik";
        case Criterion::aic: return "aic";
        case Criterion::aicc: return "aicc";
        case Criterion::bic: return "bic";
    }
    throw std::logic_error("unknown criterion");
}

std::vector<ModelRank> rank_models(std::span<const FitResult> fits, Criterion criterion) {
    if (fits.empty()) {
        throw std::invalid_argument("rank_models: empty fit list");
    }
    std::vector<ModelRank> ranked(fits.size());
    for (std::size_t i = 0; i < fits.size(); ++i) {
        ranked[i] = {i, criterion_value(fits[i], criterion), 0};
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const ModelRank& a, const ModelRank& b) { return a.value < b.value; });
    // minimum-rank ties: rank = 1 + number of strictly better models
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (i > 0 && ranked[i].value - ranked[i - 1].value <= kRankTie) {
            ranked[i].rank = ranked[i - 1].rank;
        } else {
            ranked[i].rank = i + 1;
        }
    }
    return ranked;
}

}  // namespace ctp
