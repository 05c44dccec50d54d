#include "ctp/distribution.hpp"

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>

namespace ctp {

namespace {

// 53-bit uniform in [0,1); mt19937_64 output is standardized, so streams
// are reproducible across platforms.
double uniform01(std::mt19937_64& eng) {
    return std::ldexp(static_cast<double>(eng() >> 11), -53);
}

}  // namespace

ParetoBase::ParetoBase(double x0_, double alpha_) : x0(x0_), alpha(alpha_) {
    if (!(std::isfinite(x0) && x0 > 0.0)) {
        throw std::invalid_argument("ParetoBase: x0 must be positive and finite");
    }
    if (!(std::isfinite(alpha) && alpha > 0.0)) {
        throw std::invalid_argument("ParetoBase: alpha must be positive and finite");
    }
}

CtpDistribution CtpDistribution::checked(const ParetoBase& base, const DeltaCoefficients& delta) {
    const ValidityCertificate cert = validity_check(delta);
    if (!cert.is_valid) {
        throw std::domain_error("CtpDistribution: mixing density dips to " +
                                std::to_string(cert.min_value) + " at t = " +
                                std::to_string(cert.argmin_t) + "; not a distribution");
    }
    return CtpDistribution(base, delta, cert);
}

CtpDistribution CtpDistribution::unchecked(const ParetoBase& base, const DeltaCoefficients& delta) {
    return CtpDistribution(base, delta, validity_check(delta));
}

double CtpDistribution::pareto_u(double x) const {
    const double u = std::exp(base_.alpha * (std::log(base_.x0) - std::log(x)));
    return u > 1.0 ? 1.0 : u;
}

double CtpDistribution::cdf(double x) const {
    if (x <= base_.x0) return 0.0;
    return 1.0 - survival(x);
}

double CtpDistribution::survival(double x) const {
    if (x <= base_.x0) return 1.0;
    const double d1 = delta_.delta1;
    const double d2 = delta_.delta2;
    const double u = pareto_u(x);
    // coefficients sum to 1, so survival(x0) = 1
    const double s1 = 3.0 - 2.0 * d1 - d2;
    const double s2 = 3.0 * d1 + 2.0 * d2 - 3.0;
    const double s3 = 1.0 - d1 - d2;
    return u * (s1 + u * (s2 + u * s3));
}

double CtpDistribution::pdf(double x) const {
    if (x < base_.x0) return 0.0;
    const double d1 = delta_.delta1;
    const double d2 = delta_.delta2;
    const double u = pareto_u(x);
    const double p0 = 3.0 - 2.0 * d1 - d2;
    const double p1 = 6.0 * d1 + 4.0 * d2 - 6.0;
    const double p2 = 3.0 - 3.0 * d1 - 3.0 * d2;
    // alpha*x0^alpha/x^(alpha+1) == (alpha/x)*u, which cannot overflow for
    // large alpha the way the power form can
    return (base_.alpha / x) * u * (p0 + u * (p1 + u * p2));
}

double CtpDistribution::hazard(double x) const {
    if (x < base_.x0) {
        throw std::domain_error("hazard: x below the support");
    }
    const double s = survival(x);
    if (s <= 0.0) {
        throw std::domain_error("hazard: survival underflowed to zero");
    }
    return pdf(x) / s;
}

double CtpDistribution::quantile(double p) const {
    if (!(p >= 0.0 && p < 1.0)) {
        throw std::domain_error("quantile: p outside [0,1)");
    }
    if (!cert_.is_valid) {
        throw std::domain_error("quantile: distribution is not valid");
    }
    if (p == 0.0) return base_.x0;

    // Work on the survival side: solve S(s) = 1-p for s = 1-t in (0,1],
    // where S(s) = s*(s1 + s*(s2 + s*s3)) is monotone increasing with
    // derivative r(1-s) >= 0. Solving for s rather than t keeps full
    // relative precision deep in the right tail.
    const double d1 = delta_.delta1;
    const double d2 = delta_.delta2;
    const double s1 = 3.0 - 2.0 * d1 - d2;
    const double s2 = 3.0 * d1 + 2.0 * d2 - 3.0;
    const double s3 = 1.0 - d1 - d2;
    const double q = 1.0 - p;

    auto S = [&](double s) { return s * (s1 + s * (s2 + s * s3)); };
    auto r = [&](double s) {  // S'(s) = r(1-s)
        const double t = 1.0 - s;
        return d1 + t * (2.0 * d2 + 3.0 * s3 * t);
    };

    double lo = 0.0, hi = 1.0;
    double s = q;  // exact for the baseline Pareto, decent elsewhere
    for (int iter = 0; iter < 200; ++iter) {
        const double f = S(s) - q;
        if (f == 0.0) break;
        if (f > 0.0) {
            hi = s;
        } else {
            lo = s;
        }
        const double deriv = r(s);
        double next;
        if (deriv > 0.0) {
            next = s - f / deriv;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        } else {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - s) <= 1e-15 * s) {
            s = next;
            break;
        }
        s = next;
    }
    // x = x0 * s^(-1/alpha)
    return base_.x0 * std::exp(-std::log(s) / base_.alpha);
}

std::vector<double> CtpDistribution::sample(std::size_t n, std::uint64_t seed) const {
    if (!cert_.is_valid) {
        throw std::domain_error("sample: distribution is not valid");
    }
    std::vector<double> uniforms(n);
    std::mt19937_64 eng(seed);
    for (double& u : uniforms) u = uniform01(eng);

    std::vector<double> draws(n);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        draws[static_cast<std::size_t>(i)] = quantile(uniforms[static_cast<std::size_t>(i)]);
    }
    return draws;
}

std::vector<double> CtpDistribution::sample_serial(std::size_t n, std::uint64_t seed) const {
    if (!cert_.is_valid) {
        throw std::domain_error("sample: distribution is not valid");
    }
    std::vector<double> draws(n);
    std::mt19937_64 eng(seed);
    for (double& x : draws) x = quantile(uniform01(eng));
    return draws;
}

}  // namespace ctp
