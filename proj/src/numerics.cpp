#include "sectorcast/numerics.hpp"

#include "sectorcast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sectorcast {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

void validate(const BoundedProblem& problem) {
    if (problem.dimension() == 0 || problem.upper.size() != problem.dimension()) {
        throw ArgumentError("bounded problem needs matching non-empty bound vectors");
    }
    for (std::size_t i = 0; i < problem.dimension(); ++i) {
        if (!(problem.lower[i] < problem.upper[i])) {
            throw ArgumentError("lower bound must be below upper bound in every coordinate");
        }
    }
    if (!problem.objective) {
        throw ArgumentError("bounded problem has no objective");
    }
}

class Evaluator {
public:
    explicit Evaluator(const BoundedProblem& problem) : problem_(problem) {}

    void clamp(std::vector<double>& x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::clamp(x[i], problem_.lower[i], problem_.upper[i]);
        }
    }

    double operator()(const std::vector<double>& x) {
        ++count_;
        const double v = problem_.objective(x);
        return std::isfinite(v) ? v : kObjectivePenalty;
    }

    std::size_t count() const noexcept { return count_; }

private:
    const BoundedProblem& problem_;
    std::size_t count_ = 0;
};

} // namespace

OptimResult minimize_bounded(const BoundedProblem& problem, std::span<const double> start,
                             double tol, std::size_t max_evals) {
    validate(problem);
    const std::size_t n = problem.dimension();
    if (start.size() != n) {
        throw ArgumentError("start point has wrong dimension");
    }
    if (!(tol > 0.0)) {
        throw ArgumentError("tolerance must be positive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (start[i] < problem.lower[i] || start[i] > problem.upper[i]) {
            throw ArgumentError("start point outside bounds");
        }
    }

    Evaluator eval(problem);
    std::vector<std::vector<double>> simplex;
    std::vector<double> values;
    simplex.reserve(n + 1);
    values.reserve(n + 1);

    simplex.emplace_back(start.begin(), start.end());
    const double f0 = problem.objective(simplex[0]);
    if (!std::isfinite(f0)) {
        throw ArgumentError("objective is not finite at the start point");
    }
    values.push_back(f0);
    const std::size_t evaluations = 1;

    for (std::size_t i = 0; i < n; ++i) {
        auto vertex = simplex[0];
        const double step = 0.1 * (problem.upper[i] - problem.lower[i]);
        vertex[i] = vertex[i] + step <= problem.upper[i] ? vertex[i] + step : vertex[i] - step;
        eval.clamp(vertex);
        values.push_back(eval(vertex));
        simplex.push_back(std::move(vertex));
    }

    std::vector<std::size_t> order(n + 1);
    bool converged = false;
    auto total = [&] { return evaluations + eval.count(); };

    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n - 1];

        const double spread = values[worst] - values[best];
        if (spread <= tol * std::max(std::abs(values[best]), 1.0)) {
            converged = true;
            break;
        }
        if (total() >= max_evals) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i];
        }
        for (auto& c : centroid) c /= static_cast<double>(n);

        auto along = [&](double coef, const std::vector<double>& from) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = centroid[i] + coef * (from[i] - centroid[i]);
            eval.clamp(p);
            return p;
        };

        auto reflected = along(-kReflect, simplex[worst]);
        const double f_reflected = eval(reflected);

        if (f_reflected < values[best]) {
            auto expanded = along(-kExpand, simplex[worst]);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                simplex[worst] = std::move(expanded);
                values[worst] = f_expanded;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = f_reflected;
            continue;
        }

        // outside contraction toward the reflected point, inside toward the worst
        const bool outside = f_reflected < values[worst];
        auto contracted = outside ? along(kContract, reflected) : along(kContract, simplex[worst]);
        const double f_contracted = eval(contracted);
        if (f_contracted < std::min(f_reflected, values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = f_contracted;
            continue;
        }

        for (std::size_t k = 0; k <= n; ++k) {
            if (k == best) continue;
            for (std::size_t i = 0; i < n; ++i) {
                simplex[k][i] = simplex[best][i] + kShrink * (simplex[k][i] - simplex[best][i]);
            }
            eval.clamp(simplex[k]);
            values[k] = eval(simplex[k]);
        }
    }

    const auto best = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    return OptimResult{simplex[best], values[best], total(), converged};
}

std::vector<std::vector<double>> grid_points(const BoundedProblem& problem, int points_per_dim) {
    validate(problem);
    if (points_per_dim < 1) {
        throw ArgumentError("grid needs at least one point per dimension");
    }
    const std::size_t n = problem.dimension();
    const auto k = static_cast<std::size_t>(points_per_dim);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= k;

    std::vector<std::vector<double>> points;
    points.reserve(total);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double width = problem.upper[i] - problem.lower[i];
            p[i] = problem.lower[i] + width * (static_cast<double>(digits[i]) + 0.5) / static_cast<double>(k);
        }
        points.push_back(std::move(p));
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < k) break;
            digits[i] = 0;
        }
    }
    return points;
}

OptimResult multistart_minimize(const BoundedProblem& problem, int points_per_dim, double tol,
                                std::size_t max_evals, std::span<const std::vector<double>> extra_starts) {
    auto starts = grid_points(problem, points_per_dim);
    starts.insert(starts.end(), extra_starts.begin(), extra_starts.end());

    OptimResult best;
    bool have = false;
    std::size_t evaluations = 0;
    for (const auto& s : starts) {
        auto r = minimize_bounded(problem, s, tol, max_evals);
        evaluations += r.evaluations;
        if (!have || r.value < best.value) {
            best = std::move(r);
            have = true;
        }
    }
    best.evaluations = evaluations;
    return best;
}

} // namespace sectorcast
