#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ctp {

struct SixNumberSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

/// Quantile of sorted data by linear interpolation of order statistics at
/// position 1 + (n-1)q (the common spreadsheet/statistical default).
double quantile_linear(std::span<const double> sorted_values, double q);

/// min, Q1, median, mean, Q3, max. Throws std::invalid_argument on empty
/// input.
SixNumberSummary describe(std::span<const double> values);

/// Two-sided Kolmogorov-Smirnov distance between the empirical cdf of the
/// data and a model cdf.
double ks_statistic(std::vector<double> data, const std::function<double(double)>& cdf);

}  // namespace ctp
