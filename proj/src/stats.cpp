#include "ctp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ctp {

double quantile_linear(std::span<const double> sorted_values, double q) {
    if (sorted_values.empty()) {
        throw std::invalid_argument("quantile_linear: empty data");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::domain_error("quantile_linear: q outside [0,1]");
    }
    const std::size_t n = sorted_values.size();
    const double pos = static_cast<double>(n - 1) * q;  // 1 + (n-1)q, 0-based
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= n) return sorted_values[n - 1];
    const double frac = pos - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

SixNumberSummary describe(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("describe: empty data");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double v : sorted) sum += v;

    SixNumberSummary s;
    s.min = sorted.front();
    s.q1 = quantile_linear(sorted, 0.25);
    s.median = quantile_linear(sorted, 0.5);
    s.mean = sum / static_cast<double>(sorted.size());
    s.q3 = quantile_linear(sorted, 0.75);
    s.max = sorted.back();
    return s;
}

double ks_statistic(std::vector<double> data, const std::function<double(double)>& cdf) {
    if (data.empty()) {
        throw std::invalid_argument("ks_statistic: empty data");
    }
    std::sort(data.begin(), data.end());
    const double n = static_cast<double>(data.size());
    double d = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double f = cdf(data[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

}  // namespace ctp
