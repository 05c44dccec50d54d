#include "ctp/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctp {

namespace {

void require_order_below_alpha(double alpha, int k, const char* who) {
    if (!(alpha > static_cast<double>(k))) {
        throw std::domain_error(std::string(who) + ": moment of order " + std::to_string(k) +
                                " does not exist for alpha = " + std::to_string(alpha));
    }
}

}  // namespace

double raw_moment(const CtpDistribution& dist, int k) {
    if (k < 1) {
        throw std::domain_error("raw_moment: order must be >= 1");
    }
    const double alpha = dist.base().alpha;
    require_order_below_alpha(alpha, k, "raw_moment");
    const double d1 = dist.delta().delta1;
    const double d2 = dist.delta().delta2;
    const double kd = static_cast<double>(k);
    const double numerator = -d1 * kd * kd + (5.0 * d1 + 2.0 * d2) * kd * alpha - 6.0 * alpha * alpha;
    const double denominator = (kd - alpha) * (kd - 2.0 * alpha) * (kd - 3.0 * alpha);
    return alpha * std::pow(dist.base().x0, kd) * numerator / denominator;
}

double mean(const CtpDistribution& dist) { return raw_moment(dist, 1); }

double variance(const CtpDistribution& dist) {
    const double m1 = raw_moment(dist, 1);
    const double m2 = raw_moment(dist, 2);
    return m2 - m1 * m1;
}

double mgf_partial(const CtpDistribution& dist, double t, int terms) {
    if (terms < 0) {
        throw std::domain_error("mgf_partial: K must be >= 0");
    }
    require_order_below_alpha(dist.base().alpha, terms, "mgf_partial");
    double sum = 1.0;  // the k = 0 term of the series is exactly 1
    double factor = 1.0;
    for (int k = 1; k <= terms; ++k) {
        factor *= t / static_cast<double>(k);
        sum += factor * raw_moment(dist, k);
    }
    return sum;
}

std::complex<double> cf_partial(const CtpDistribution& dist, double t, int terms) {
    if (terms < 0) {
        throw std::domain_error("cf_partial: K must be >= 0");
    }
    require_order_below_alpha(dist.base().alpha, terms, "cf_partial");
    std::complex<double> sum = 1.0;
    std::complex<double> factor = 1.0;
    const std::complex<double> it(0.0, t);
    for (int k = 1; k <= terms; ++k) {
        factor *= it / static_cast<double>(k);
        sum += factor * raw_moment(dist, k);
    }
    return sum;
}

}  // namespace ctp
