#pragma once

#include <span>
#include <vector>

#include "ctp/delta.hpp"

namespace ctp {

/// Minimum of the mixing density over an n_points uniform grid on [0,1].
/// Brute-force counterpart of the closed-form validity_check; the grid
/// minimum is always >= the true minimum. Grid min is exact min-reduction,
/// so serial and parallel variants agree bitwise.
double mixing_pdf_grid_min(const DeltaCoefficients& delta, std::size_t n_points);
double mixing_pdf_grid_min_serial(const DeltaCoefficients& delta, std::size_t n_points);

/// Batched scan, parallel over the delta list.
std::vector<double> mixing_pdf_grid_min_batch(std::span<const DeltaCoefficients> deltas,
                                              std::size_t n_points);
std::vector<double> mixing_pdf_grid_min_batch_serial(std::span<const DeltaCoefficients> deltas,
                                                     std::size_t n_points);

}  // namespace ctp
