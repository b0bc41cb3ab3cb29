#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sectorcast {

/// Minimize `objective` over the box [lower, upper].
struct BoundedProblem {
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<double(std::span<const double>)> objective;

    std::size_t dimension() const noexcept { return lower.size(); }
};

struct OptimResult {
    std::vector<double> argmin;
    double value = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Substituted for non-finite objective values away from the start point.
inline constexpr double kObjectivePenalty = 1e30;

/// Nelder-Mead (reflection 1, expansion 2, contraction 0.5, shrink 0.5) with every
/// trial point clamped into the box. The initial simplex steps 10% of the box width
/// along each axis. Converged once the spread of simplex values is within
/// tol * max(|best|, 1). Running out of evaluations is reported through
/// `converged == false`, not an exception.
OptimResult minimize_bounded(const BoundedProblem& problem, std::span<const double> start,
                             double tol = 1e-10, std::size_t max_evals = 5000);

/// Cell-centred regular grid with `points_per_dim` points per axis
/// (a single point is the box centre), in lexicographic order.
std::vector<std::vector<double>> grid_points(const BoundedProblem& problem, int points_per_dim);

/// Runs minimize_bounded from every grid point and then from every extra start,
/// returning the first strictly best result.
OptimResult multistart_minimize(const BoundedProblem& problem, int points_per_dim,
                                double tol = 1e-10, std::size_t max_evals = 5000,
                                std::span<const std::vector<double>> extra_starts = {});

} // namespace sectorcast
