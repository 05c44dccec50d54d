#include "ctp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ctp {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

SimplexResult minimize_simplex(const std::function<double(std::span<const double>)>& f,
                               std::span<const double> start,
                               const SimplexOptions& options) {
    const std::size_t dim = start.size();
    const std::size_t m = dim + 1;

    std::vector<std::vector<double>> vertices(m, std::vector<double>(start.begin(), start.end()));
    for (std::size_t j = 0; j < dim; ++j) {
        vertices[j + 1][j] += 0.15 * std::max(std::abs(start[j]), 0.5);
    }
    std::vector<double> values(m);
    for (std::size_t i = 0; i < m; ++i) values[i] = f(vertices[i]);

    std::vector<std::size_t> order(m);
    std::vector<double> centroid(dim), candidate(dim);
    bool converged = false;
    std::size_t iter = 0;

    for (; iter < options.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[m - 2];

        const double spread = values[worst] - values[best];
        double diameter = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                diameter = std::max(diameter, std::abs(vertices[i][j] - vertices[best][j]));
            }
        }
        if (spread <= options.tol_objective * std::max(1.0, std::abs(values[best])) ||
            diameter <= options.tol_params) {
            converged = true;
            break;
        }

        // centroid of all but the worst vertex
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += vertices[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double coef) {
            for (std::size_t j = 0; j < dim; ++j) {
                candidate[j] = centroid[j] + coef * (centroid[j] - vertices[worst][j]);
            }
        };

        blend(kReflect);
        const double reflected = f(candidate);
        if (reflected < values[order[0]]) {
            const std::vector<double> reflected_point = candidate;
            blend(kExpand);
            const double expanded = f(candidate);
            if (expanded < reflected) {
                vertices[worst] = candidate;
                values[worst] = expanded;
            } else {
                vertices[worst] = reflected_point;
                values[worst] = reflected;
            }
        } else if (reflected < values[second_worst]) {
            vertices[worst] = candidate;
            values[worst] = reflected;
        } else {
            if (reflected < values[worst]) {
                // outside contraction
                for (std::size_t j = 0; j < dim; ++j) {
                    candidate[j] = centroid[j] + kContract * (candidate[j] - centroid[j]);
                }
            } else {
                // inside contraction
                for (std::size_t j = 0; j < dim; ++j) {
                    candidate[j] = centroid[j] - kContract * (centroid[j] - vertices[worst][j]);
                }
            }
            const double contracted = f(candidate);
            if (contracted < std::min(reflected, values[worst])) {
                vertices[worst] = candidate;
                values[worst] = contracted;
            } else {
                for (std::size_t i = 0; i < m; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < dim; ++j) {
                        vertices[i][j] =
                            vertices[best][j] + kShrink * (vertices[i][j] - vertices[best][j]);
                    }
                    values[i] = f(vertices[i]);
                }
            }
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    return {vertices[best], values[best], iter, converged};
}

}  // namespace ctp
