#include "sectorcast/errors.hpp"
#include "sectorcast/holtwinters.hpp"
#include "sectorcast/ingest.hpp"
#include "sectorcast/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace sectorcast;

namespace {

BoundedProblem one_dim(double lo, double hi, std::function<double(double)> f) {
    return {{lo}, {hi}, [f = std::move(f)](std::span<const double> x) { return f(x[0]); }};
}

} // namespace

TEST_CASE("minimize_bounded analytic minima") {
    SUBCASE("interior") {
        const auto p = one_dim(0, 10, [](double x) { return (x - 3) * (x - 3); });
        const std::vector<double> start{0.0};
        const auto r = minimize_bounded(p, start);
        CHECK(std::abs(r.argmin[0] - 3.0) < 1e-4);
        CHECK(r.converged);
    }
    SUBCASE("two dimensions") {
        const BoundedProblem p{{-5, -5}, {5, 5}, [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }};
        const std::vector<double> start{4.0, 4.0};
        const auto r = minimize_bounded(p, start);
        CHECK(std::abs(r.argmin[0]) < 1e-4);
        CHECK(std::abs(r.argmin[1]) < 1e-4);
    }
    SUBCASE("active bound") {
        const auto p = one_dim(0, 2, [](double x) { return (x - 3) * (x - 3); });
        const std::vector<double> start{0.5};
        const auto r = minimize_bounded(p, start);
        CHECK(std::abs(r.argmin[0] - 2.0) < 1e-4);
    }
}

TEST_CASE("minimize_bounded contract") {
    std::size_t out_of_bounds = 0;
    const BoundedProblem p{{-1, 0}, {1, 2}, [&](std::span<const double> x) {
                               if (x[0] < -1 || x[0] > 1 || x[1] < 0 || x[1] > 2) ++out_of_bounds;
                               return std::pow(x[0] - 5, 2) + std::pow(x[1] + 3, 2) + x[0] * x[1];
                           }};
    const std::vector<double> start{0.3, 1.7};
    const auto r = minimize_bounded(p, start);
    CHECK(out_of_bounds == 0);
    CHECK(r.value <= p.objective(start));
    CHECK(r.value == p.objective(r.argmin));
    CHECK(r.argmin[0] >= -1.0);
    CHECK(r.argmin[0] <= 1.0);

    SUBCASE("errors") {
        const std::vector<double> outside{3.0, 1.0};
        CHECK_THROWS_AS(minimize_bounded(p, outside), ArgumentError);
        CHECK_THROWS_AS(minimize_bounded(p, start, 0.0), ArgumentError);
        const auto nan_start = one_dim(0, 1, [](double) { return std::numeric_limits<double>::quiet_NaN(); });
        const std::vector<double> s{0.5};
        CHECK_THROWS_AS(minimize_bounded(nan_start, s), ArgumentError);
        const BoundedProblem inverted{{1.0}, {0.0}, [](std::span<const double>) { return 0.0; }};
        CHECK_THROWS_AS(minimize_bounded(inverted, s), ArgumentError);
    }
    SUBCASE("budget exhaustion is reported, not thrown") {
        const BoundedProblem rosen{{-2, -2}, {2, 2}, [](std::span<const double> x) {
                                       return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
                                   }};
        const std::vector<double> s{-1.5, 1.5};
        const auto r2 = minimize_bounded(rosen, s, 1e-14, 10);
        CHECK_FALSE(r2.converged);
        CHECK(r2.evaluations <= 14);
    }
    SUBCASE("non-finite values away from the start are penalised") {
        const auto wall = one_dim(-1, 1, [](double x) { return x > 0.5 ? std::numeric_limits<double>::infinity() : (x - 0.4) * (x - 0.4); });
        const std::vector<double> s{0.0};
        const auto r3 = minimize_bounded(wall, s);
        CHECK(std::abs(r3.argmin[0] - 0.4) < 1e-4);
    }
}

TEST_CASE("multistart_minimize") {
    SUBCASE("double well") {
        const auto p = one_dim(-2, 2, [](double x) { return std::pow(x * x - 1, 2); });
        const auto r = multistart_minimize(p, 3);
        CHECK(std::abs(r.value) < 1e-6);
    }
    SUBCASE("a single grid point is the box centre") {
        const BoundedProblem p{{0, -4}, {2, 4}, [](std::span<const double> x) { return std::pow(x[0] - 1.7, 2) + std::pow(x[1] - 0.2, 4); }};
        const auto grid = grid_points(p, 1);
        REQUIRE(grid.size() == 1);
        CHECK(grid[0] == std::vector<double>{1.0, 0.0});
        const auto multi = multistart_minimize(p, 1);
        const std::vector<double> centre{1.0, 0.0};
        const auto single = minimize_bounded(p, centre);
        CHECK(multi.argmin == single.argmin);
        CHECK(multi.value == single.value);
    }
    SUBCASE("grid layout") {
        const BoundedProblem p{{0, 0}, {1, 1}, [](std::span<const double>) { return 0.0; }};
        const auto grid = grid_points(p, 3);
        REQUIRE(grid.size() == 9);
        CHECK(grid.front()[0] == doctest::Approx(1.0 / 6.0));
        CHECK(grid.back()[1] == doctest::Approx(5.0 / 6.0));
        CHECK_THROWS_AS(grid_points(p, 0), ArgumentError);
    }
    SUBCASE("Holt-Winters SSE surface of the golden training window") {
        const auto train = golden_auto_series().slice(CalendarMonth(2010, 1), CalendarMonth(2014, 12));
        const auto init = hw_initial_state(train);
        const BoundedProblem p{{0, 0, 0}, {1, 1, 1}, [&](std::span<const double> x) {
                                   return hw_sse(train, HWParams{x[0], x[1], x[2]}, init);
                               }};
        const double at_default = hw_sse(train, HWParams{0.3, 0.1, 0.1}, init);
        const auto r = multistart_minimize(p, 3, 1e-12, 5000);
        CHECK(r.value <= at_default);
        for (const auto& s : grid_points(p, 3)) CHECK(r.value <= p.objective(s));
    }
    SUBCASE("deterministic") {
        const BoundedProblem p{{-3, -3}, {3, 3}, [](std::span<const double> x) {
                                   return std::sin(3 * x[0]) + std::cos(2 * x[1]) + 0.1 * (x[0] * x[0] + x[1] * x[1]);
                               }};
        const auto a = multistart_minimize(p, 4);
        const auto b = multistart_minimize(p, 4);
        CHECK(a.argmin == b.argmin);
        CHECK(a.value == b.value);
    }
    SUBCASE("extra starts are honoured") {
        const auto p = one_dim(-3, 3, [](double x) { return std::pow(x * x - 4, 2) + 0.5 * x; });
        const std::vector<std::vector<double>> extra{{-2.0}};
        const auto r = multistart_minimize(p, 1, 1e-12, 5000, extra);
        CHECK(r.value <= p.objective(std::vector<double>{-2.0}));
    }
}
