#include "sectorcast/decompose.hpp"

#include "sectorcast/errors.hpp"

#include <numeric>

namespace sectorcast {

PartialMonthlySeries centered_ma(const MonthlySeries& series, int period) {
    if (period < 2 || period % 2 != 0) {
        throw ArgumentError("centered moving average needs an even period >= 2");
    }
    const auto n = series.size();
    const auto window = static_cast<std::size_t>(period);
    if (n < window + 1) {
        throw InsufficientDataError("centered moving average of period " + std::to_string(period) +
                                    " needs " + std::to_string(window + 1) + " values, got " +
                                    std::to_string(n));
    }
    const auto half = window / 2;
    const auto& y = series.values();
    std::vector<std::optional<double>> trend(n);
    for (std::size_t t = half; t + half < n; ++t) {
        double sum = 0.5 * (y[t - half] + y[t + half]);
        for (std::size_t k = t - half + 1; k < t + half; ++k) sum += y[k];
        trend[t] = sum / static_cast<double>(period);
    }
    return PartialMonthlySeries(series.start(), std::move(trend));
}

SeasonalIndices seasonal_indices(const MonthlySeries& observed, const PartialMonthlySeries& trend) {
    if (observed.start() != trend.start() || observed.size() != trend.size()) {
        throw ArgumentError("trend is not aligned with the observed series");
    }
    std::array<double, 12> sum{};
    std::array<std::size_t, 12> count{};
    for (std::size_t t = 0; t < observed.size(); ++t) {
        if (!trend[t]) continue;
        const auto m = static_cast<std::size_t>(observed.month_at(t).month() - 1);
        sum[m] += observed[t] - *trend[t];
        ++count[m];
    }
    SeasonalIndices raw{};
    for (std::size_t m = 0; m < 12; ++m) {
        if (count[m] == 0) {
            throw InsufficientDataError("no detrended values for calendar month " + std::to_string(m + 1));
        }
        raw[m] = sum[m] / static_cast<double>(count[m]);
    }
    const double centre = std::accumulate(raw.begin(), raw.end(), 0.0) / 12.0;
    for (auto& v : raw) v -= centre;
    return raw;
}

Decomposition decompose_additive(const MonthlySeries& series) {
    if (series.size() < 24) {
        throw InsufficientDataError("decomposition needs at least 24 months, got " +
                                    std::to_string(series.size()));
    }
    auto trend = centered_ma(series, 12);
    const auto indices = seasonal_indices(series, trend);

    std::vector<double> seasonal(series.size());
    std::vector<std::optional<double>> random(series.size());
    for (std::size_t t = 0; t < series.size(); ++t) {
        seasonal[t] = indices[static_cast<std::size_t>(series.month_at(t).month() - 1)];
        if (trend[t]) random[t] = series[t] - *trend[t] - seasonal[t];
    }
    return Decomposition{
        series,
        std::move(trend),
        indices,
        MonthlySeries(series.start(), std::move(seasonal)),
        PartialMonthlySeries(series.start(), std::move(random)),
    };
}

} // namespace sectorcast
