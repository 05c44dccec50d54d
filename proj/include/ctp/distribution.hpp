#pragma once

#include <cstdint>
#include <vector>

#include "ctp/delta.hpp"

namespace ctp {

/// Baseline Pareto parameters: scale x0 > 0 (data units) and shape alpha > 0.
struct ParetoBase {
    double x0 = 1.0;
    double alpha = 1.0;

    ParetoBase() = default;
    ParetoBase(double x0_, double alpha_);  // rejects x0 <= 0 or alpha <= 0
};

/// A cubic-transmuted Pareto distribution: baseline plus delta coefficients,
/// with the validity certificate computed once at construction.
///
/// The checked factory refuses coefficient pairs whose mixing density dips
/// below -kValidityEps; the unchecked factory keeps the certificate but
/// accepts anything, so the raw (possibly negative) cdf/pdf polynomials can
/// still be evaluated. Objects are immutable and safe to share across
/// threads; all operations are pure.
class CtpDistribution {
public:
    static CtpDistribution checked(const ParetoBase& base, const DeltaCoefficients& delta);
    static CtpDistribution unchecked(const ParetoBase& base, const DeltaCoefficients& delta);

    const ParetoBase& base() const { return base_; }
    const DeltaCoefficients& delta() const { return delta_; }
    const ValidityCertificate& certificate() const { return cert_; }
    bool is_valid() const { return cert_.is_valid; }

    /// F(x) = 1 + (2d1+d2-3)u + (3-3d1-2d2)u^2 + (d1+d2-1)u^3, u = (x0/x)^alpha.
    /// Returns 0 for x <= x0. For an unchecked distribution this is the raw
    /// polynomial and may be negative.
    double cdf(double x) const;

    /// f(x) = (alpha*x0^alpha/x^(alpha+1)) * [(3-2d1-d2) + (6d1+4d2-6)u + (3-3d1-3d2)u^2].
    /// Returns 0 for x < x0. May be negative for an unchecked distribution.
    double pdf(double x) const;

    /// 1 - F(x), evaluated as the complementary polynomial
    /// (3-2d1-d2)u + (3d1+2d2-3)u^2 + (1-d1-d2)u^3.
    double survival(double x) const;

    /// pdf/survival. Throws std::domain_error when the survival has
    /// underflowed to zero in the far right tail.
    double hazard(double x) const;

    /// Inverse cdf for p in [0,1). Inverts the monotone mixing cdf on [0,1]
    /// by safeguarded Newton/bisection, then maps through x0*(1-t)^(-1/alpha).
    /// Requires a valid distribution.
    double quantile(double p) const;

    /// n inverse-transform draws, deterministic for a fixed seed regardless
    /// of thread count. Requires a valid distribution.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    /// Serial reference for sample(); kept for tests and benchmarks.
    std::vector<double> sample_serial(std::size_t n, std::uint64_t seed) const;

private:
    CtpDistribution(const ParetoBase& base, const DeltaCoefficients& delta,
                    const ValidityCertificate& cert)
        : base_(base), delta_(delta), cert_(cert) {}

    // (x0/x)^alpha via exp(alpha*(ln x0 - ln x)), clamped to 1 for x at or
    // below x0 up to float noise.
    double pareto_u(double x) const;

    ParetoBase base_;
    DeltaCoefficients delta_;
    ValidityCertificate cert_;
};

}  // namespace ctp
