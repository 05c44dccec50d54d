#include "ctp/grid_scan.hpp"

#include <algorithm>
#include <cstddef>

namespace ctp {

namespace {

double r_at(const DeltaCoefficients& delta, double t) {
    return delta.delta1 + t * (2.0 * delta.delta2 + 3.0 * delta.delta3() * t);
}

}  // namespace

double mixing_pdf_grid_min_serial(const DeltaCoefficients& delta, std::size_t n_points) {
    const double step = 1.0 / static_cast<double>(n_points - 1);
    double min_value = r_at(delta, 0.0);
    for (std::size_t i = 1; i < n_points; ++i) {
        const double t = std::min(1.0, static_cast<double>(i) * step);
        min_value = std::min(min_value, r_at(delta, t));
    }
    return min_value;
}

double mixing_pdf_grid_min(const DeltaCoefficients& delta, std::size_t n_points) {
    const double step = 1.0 / static_cast<double>(n_points - 1);
    double min_value = r_at(delta, 0.0);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n_points);
#pragma omp parallel for schedule(static) reduction(min : min_value)
    for (std::ptrdiff_t i = 1; i < count; ++i) {
        const double t = std::min(1.0, static_cast<double>(i) * step);
        min_value = std::min(min_value, r_at(delta, t));
    }
    return min_value;
}

std::vector<double> mixing_pdf_grid_min_batch_serial(std::span<const DeltaCoefficients> deltas,
                                                     std::size_t n_points) {
    std::vector<double> out(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        out[i] = mixing_pdf_grid_min_serial(deltas[i], n_points);
    }
    return out;
}

std::vector<double> mixing_pdf_grid_min_batch(std::span<const DeltaCoefficients> deltas,
                                              std::size_t n_points) {
    std::vector<double> out(deltas.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(deltas.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] =
            mixing_pdf_grid_min_serial(deltas[static_cast<std::size_t>(i)], n_points);
    }
    return out;
}

}  // namespace ctp
