#include "sectorcast/holtwinters.hpp"

#include "sectorcast/errors.hpp"
#include "sectorcast/numerics.hpp"

#include <optional>

namespace sectorcast {
namespace {

std::size_t month_slot(const MonthlySeries& series, std::size_t offset) {
    return static_cast<std::size_t>(series.month_at(offset).month() - 1);
}

void check_params(const HWParams& p) {
    for (double v : {p.alpha, p.beta, p.gamma}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ArgumentError("Holt-Winters smoothing constants must lie in [0, 1]");
        }
    }
}

// Shared recursion; `fitted` may be null.
double run_filter(const MonthlySeries& series, const HWParams& p, const HWState& init, HWState& state,
                  std::vector<std::optional<double>>* fitted) {
    if (series.size() <= kHWFirstFiltered) {
        throw InsufficientDataError("Holt-Winters filtering needs more than " +
                                    std::to_string(kHWFirstFiltered) + " months");
    }
    state = init;
    double sse = 0.0;
    const auto& y = series.values();
    for (std::size_t t = kHWFirstFiltered; t < y.size(); ++t) {
        const std::size_t m = month_slot(series, t);
        const double season = state.seasonal[m];
        const double forecast = state.level + state.slope + season;
        const double err = y[t] - forecast;
        sse += err * err;
        if (fitted) (*fitted)[t] = forecast;

        const double level = p.alpha * (y[t] - season) + (1.0 - p.alpha) * (state.level + state.slope);
        state.slope = p.beta * (level - state.level) + (1.0 - p.beta) * state.slope;
        state.seasonal[m] = p.gamma * (y[t] - level) + (1.0 - p.gamma) * season;
        state.level = level;
    }
    return sse;
}

} // namespace

HWState hw_initial_state(const MonthlySeries& series) {
    if (series.size() < kHWInitWindow) {
        throw InsufficientDataError("Holt-Winters initialisation needs " + std::to_string(kHWInitWindow) +
                                    " months, got " + std::to_string(series.size()));
    }
    const auto window = series.slice(series.start(), series.month_at(kHWInitWindow - 1));
    const auto parts = decompose_additive(window);
    const auto trend = parts.trend.present_span();

    // OLS of trend on x = 1..k
    const auto k = static_cast<double>(trend.size());
    const double x_mean = (k + 1.0) / 2.0;
    double y_mean = 0.0;
    for (double v : trend.values()) y_mean += v;
    y_mean /= k;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < trend.size(); ++i) {
        const double dx = static_cast<double>(i + 1) - x_mean;
        sxy += dx * (trend[i] - y_mean);
        sxx += dx * dx;
    }
    const double slope = sxy / sxx;
    return HWState{y_mean - slope * x_mean, slope, parts.seasonal_indices};
}

HWFilterResult hw_filter(const MonthlySeries& series, const HWParams& params, const HWState& init) {
    check_params(params);
    std::vector<std::optional<double>> fitted(series.size());
    HWState final_state{};
    const double sse = run_filter(series, params, init, final_state, &fitted);
    return HWFilterResult{PartialMonthlySeries(series.start(), std::move(fitted)), sse, final_state};
}

double hw_sse(const MonthlySeries& series, const HWParams& params, const HWState& init) {
    HWState state{};
    return run_filter(series, params, init, state, nullptr);
}

HWModel hw_fit(const MonthlySeries& series) {
    if (series.size() < kHWMinFitLength) {
        throw InsufficientDataError("Holt-Winters fitting needs " + std::to_string(kHWMinFitLength) +
                                    " months, got " + std::to_string(series.size()));
    }
    const auto init = hw_initial_state(series);
    BoundedProblem problem{
        {0.0, 0.0, 0.0},
        {1.0, 1.0, 1.0},
        [&](std::span<const double> x) { return hw_sse(series, HWParams{x[0], x[1], x[2]}, init); },
    };
    const auto best = multistart_minimize(problem, 3, 1e-12, 5000);
    const HWParams params{best.argmin[0], best.argmin[1], best.argmin[2]};
    auto filtered = hw_filter(series, params, init);
    return HWModel{params,          init,           filtered.final_state, std::move(filtered.fitted),
                   filtered.sse,    series.start(), series.end()};
}

MonthlySeries hw_forecast(const HWModel& model, int horizon) {
    if (horizon < 1) {
        throw ArgumentError("forecast horizon must be at least 1");
    }
    const auto first = model.training_end.next();
    std::vector<double> out(static_cast<std::size_t>(horizon));
    for (int h = 1; h <= horizon; ++h) {
        const auto m = static_cast<std::size_t>(first.plus(h - 1).month() - 1);
        const auto& s = model.final_state;
        out[static_cast<std::size_t>(h - 1)] = s.level + h * s.slope + s.seasonal[m];
    }
    return MonthlySeries(first, std::move(out));
}

} // namespace sectorcast
