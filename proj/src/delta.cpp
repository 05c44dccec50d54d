#include "ctp/delta.hpp"

#include <cmath>
#include <stdexcept>

namespace ctp {

DeltaCoefficients::DeltaCoefficients(double d1, double d2) : delta1(d1), delta2(d2) {
    if (!std::isfinite(d1) || !std::isfinite(d2)) {
        throw std::invalid_argument("delta coefficients must be finite");
    }
}

double mixing_pdf(const DeltaCoefficients& delta, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("mixing_pdf: t outside [0,1]");
    }
    const double d3 = delta.delta3();
    return delta.delta1 + t * (2.0 * delta.delta2 + 3.0 * d3 * t);
}

double mixing_cdf(const DeltaCoefficients& delta, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("mixing_cdf: t outside [0,1]");
    }
    const double d3 = delta.delta3();
    return t * (delta.delta1 + t * (delta.delta2 + d3 * t));
}

ValidityCertificate validity_check(const DeltaCoefficients& delta) {
    const double d1 = delta.delta1;
    const double d2 = delta.delta2;
    const double d3 = delta.delta3();

    // r(0) = d1 and r(1) = 3 - 2*d1 - d2; the interior vertex only matters
    // when the parabola opens upward (d3 > 0). d3 = 0 degenerates to the
    // linear case, still an endpoint minimum.
    double min_value = d1;
    double argmin_t = 0.0;
    const double r1 = 3.0 - 2.0 * d1 - d2;
    if (r1 < min_value) {
        min_value = r1;
        argmin_t = 1.0;
    }
    if (d3 > 0.0) {
        const double vertex_t = -d2 / (3.0 * d3);
        if (vertex_t >= 0.0 && vertex_t <= 1.0) {
            const double vertex_r = d1 - d2 * d2 / (3.0 * d3);
            if (vertex_r < min_value) {
                min_value = vertex_r;
                argmin_t = vertex_t;
            }
        }
    }
    return {min_value, argmin_t, min_value >= -kValidityEps};
}

}  // namespace ctp
