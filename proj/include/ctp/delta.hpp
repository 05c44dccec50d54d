#pragma once

namespace ctp {

/// Coefficients (delta1, delta2) of the cubic mixing polynomial; delta3 is
/// always derived as 1 - delta1 - delta2 so the three sum to one.
struct DeltaCoefficients {
    double delta1 = 1.0;
    double delta2 = 0.0;

    DeltaCoefficients() = default;
    DeltaCoefficients(double d1, double d2);  // rejects non-finite values

    double delta3() const { return 1.0 - delta1 - delta2; }
};

/// Outcome of the exact validity check: the minimum of the mixing density
/// r over [0,1], where it is attained, and the resulting verdict.
struct ValidityCertificate {
    double min_value = 0.0;
    double argmin_t = 0.0;
    bool is_valid = false;
};

/// Slack allowed below zero when certifying min r >= 0. Fitted optima sit
/// exactly on region boundaries, so a strict check would reject them due
/// to rounding.
inline constexpr double kValidityEps = 1e-12;

/// Mixing density r(t) = d1 + 2*d2*t + 3*d3*t^2 on [0,1].
/// No sign requirement; the checker itself evaluates it everywhere.
double mixing_pdf(const DeltaCoefficients& delta, double t);

/// Mixing cdf R(t) = d1*t + d2*t^2 + d3*t^3 on [0,1]. R(0)=0, R(1)=1.
double mixing_cdf(const DeltaCoefficients& delta, double t);

/// Exact closed-form minimum of the quadratic r on [0,1]: interior vertex
/// when d3 > 0 and the vertex lies inside, otherwise the smaller endpoint.
ValidityCertificate validity_check(const DeltaCoefficients& delta);

}  // namespace ctp
