#pragma once

#include <complex>

#include "ctp/distribution.hpp"

namespace ctp {

/// k-th raw moment, k >= 1:
///   alpha * x0^k * [-d1*k^2 + (5*d1+2*d2)*k*alpha - 6*alpha^2]
///                / [(k-alpha)(k-2*alpha)(k-3*alpha)]
/// Throws std::domain_error unless alpha > k (the moment does not exist
/// otherwise).
double raw_moment(const CtpDistribution& dist, int k);

double mean(const CtpDistribution& dist);      // requires alpha > 1
double variance(const CtpDistribution& dist);  // requires alpha > 2

/// Truncated moment generating function: sum_{k=0}^{K} t^k/k! * m_k with
/// m_0 = 1. Every summed term needs alpha > k, so K < alpha is required.
/// The truncation error is unquantified; partial sums are formal objects.
double mgf_partial(const CtpDistribution& dist, double t, int terms);

/// Same series with (it)^k; real and imaginary parts alternate with moment
/// parity. cf_partial(t=0) = 1 + 0i.
std::complex<double> cf_partial(const CtpDistribution& dist, double t, int terms);

}  // namespace ctp
