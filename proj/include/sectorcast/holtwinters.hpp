#pragma once

#include "sectorcast/decompose.hpp"
#include "sectorcast/series.hpp"

#include <cstddef>

namespace sectorcast {

/// Smoothing constants, each in [0, 1].
struct HWParams {
    double alpha; ///< level
    double beta;  ///< slope
    double gamma; ///< seasonal
};

/// Level, slope (points per month) and the latest seasonal offset for each calendar month.
struct HWState {
    double level;
    double slope;
    SeasonalIndices seasonal;
};

struct HWFilterResult {
    PartialMonthlySeries fitted; ///< one-step-ahead fits; absent during the first cycle
    double sse;
    HWState final_state;
};

struct HWModel {
    HWParams params;
    HWState initial_state;
    HWState final_state;
    PartialMonthlySeries fitted;
    double sse;
    CalendarMonth training_start;
    CalendarMonth training_end;
};

/// Months decomposed to build the initial state.
inline constexpr std::size_t kHWInitWindow = 24;
/// The initial state describes the end of the first seasonal cycle; filtering
/// (and the SSE) starts at this offset.
inline constexpr std::size_t kHWFirstFiltered = 12;
/// Minimum series length accepted by hw_fit.
inline constexpr std::size_t kHWMinFitLength = 36;

/// Seasonal offsets from a classical decomposition of the first 24 months. Level and
/// slope are the intercept and slope of an OLS line through the twelve moving-average
/// trend values of that window, regressed on 1..12.
HWState hw_initial_state(const MonthlySeries& series);

/// Additive Holt-Winters recursions from offset 12 onwards:
///   fitted_t = l_{t-1} + b_{t-1} + s_{t-12}
///   l_t = a (y_t - s_{t-12}) + (1 - a)(l_{t-1} + b_{t-1})
///   b_t = b (l_t - l_{t-1}) + (1 - b) b_{t-1}
///   s_t = g (y_t - l_t) + (1 - g) s_{t-12}
HWFilterResult hw_filter(const MonthlySeries& series, const HWParams& params, const HWState& init);

/// SSE of hw_filter without materialising the fitted series.
double hw_sse(const MonthlySeries& series, const HWParams& params, const HWState& init);

/// Minimises hw_sse over [0,1]^3 from a 3x3x3 grid of Nelder-Mead starts.
HWModel hw_fit(const MonthlySeries& series);

/// l_T + h b_T + s(month of T+h), h = 1..horizon, starting the month after training.
MonthlySeries hw_forecast(const HWModel& model, int horizon);

} // namespace sectorcast
