#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ctp {

struct SimplexOptions {
    std::size_t max_iterations = 2000;
    double tol_objective = 1e-10;  // relative spread of vertex values
    double tol_params = 1e-9;      // simplex diameter
};

struct SimplexResult {
    std::vector<double> x;
    double fx = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Nelder-Mead direct search with standard reflection/expansion/contraction
/// coefficients. Derivative-free, so it tolerates the kinked penalized
/// objectives that arise when optima sit on feasible-region boundaries.
SimplexResult minimize_simplex(const std::function<double(std::span<const double>)>& f,
                               std::span<const double> start,
                               const SimplexOptions& options = {});

}  // namespace ctp
