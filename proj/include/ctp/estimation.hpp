#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ctp/families.hpp"

namespace ctp {

/// Observed data plus the MLE of the scale: x0_hat is the sample minimum.
/// Requires n >= 2 and strictly positive finite values.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t n() const { return values_.size(); }
    double x0_hat() const { return x0_hat_; }

    double sum_log() const { return sum_log_; }
    /// ln(x_i / x0_hat), cached; the likelihood only sees the data through
    /// these ratios and sum_log().
    const std::vector<double>& log_ratios() const { return log_ratios_; }

private:
    std::vector<double> values_;
    std::vector<double> log_ratios_;
    double x0_hat_ = 0.0;
    double sum_log_ = 0.0;
};

struct FitConfig {
    std::size_t n_starts = 200;
    std::size_t max_iterations = 2000;
    double tol_objective = 1e-10;
    double tol_params = 1e-9;
    std::uint64_t seed = 42;
    double penalty_scale = 1e8;
    bool parallel = true;  // run starts across threads; result is identical either way
};

struct FitResult {
    FamilyId family = FamilyId::Pareto;
    double alpha_hat = 0.0;
    FamilyParams params_hat;
    double x0_hat = 0.0;
    double loglik = 0.0;
    std::size_t p = 0;  // free parameters, excludes x0
    double aic = 0.0;
    double aicc = 0.0;
    double bic = 0.0;
    bool converged = false;
    std::size_t n_starts_used = 0;
    bool boundary_active = false;
};

/// Generic delta-form log-likelihood at x0 = sample.x0_hat():
///   n log(alpha) + n alpha log(x0) - (alpha+1) sum log x_i
///     + sum log[(3-2d1-d2) + (6d1+4d2-6)u_i + (3-3d1-3d2)u_i^2]
/// Returns -infinity (the optimizer's rejection signal, not an exception)
/// when alpha <= 0, the delta fails the validity check, or any pdf term is
/// nonpositive. Throws only on dimension mismatch.
double log_likelihood(FamilyId family, double alpha, const FamilyParams& params,
                      const Sample& sample);

/// Closed-form Pareto MLE alpha_hat = n / sum ln(x_i/x0_hat); used as the
/// deterministic multi-start seed. Throws std::domain_error when all values
/// equal the minimum.
double pareto_alpha_closed_form(const Sample& sample);

struct CriteriaValues {
    double aic = 0.0;
    double aicc = 0.0;
    double bic = 0.0;
};

/// aic = -2 loglik + 2p; aicc = aic + 2p(p+1)/(n-p-1); bic = -2 loglik + p ln n.
/// Throws std::domain_error when n <= p+1.
CriteriaValues criteria(double loglik, std::size_t p, std::size_t n);

/// Constrained maximum likelihood: penalized Nelder-Mead from the
/// deterministic start (closed-form Pareto alpha, identity lambda) plus
/// seeded region samples. Starts may run in parallel; the argmax reduction
/// is done in fixed start order, so the result is deterministic for a given
/// seed regardless of interleaving. Never returns an out-of-region or
/// invalid-delta point. The reported loglik is a lower bound on the global
/// constrained optimum.
FitResult fit(FamilyId family, const Sample& sample, const FitConfig& config = {});

enum class Criterion { negloglik, aic, aicc, bic };

std::optional<Criterion> parse_criterion(std::string_view name);
std::string_view criterion_name(Criterion c);

struct ModelRank {
    std::size_t fit_index = 0;  // position in the input span
    double value = 0.0;
    std::size_t rank = 0;
};

/// Ascending by criterion; values within 1e-6 share the smallest rank
/// (minimum-rank convention, so a triple tie yields ranks 1,1,1,4).
std::vector<ModelRank> rank_models(std::span<const FitResult> fits, Criterion criterion);

}  // namespace ctp
