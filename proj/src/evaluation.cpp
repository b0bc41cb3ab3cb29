#include "sectorcast/evaluation.hpp"

#include "sectorcast/decompose.hpp"
#include "sectorcast/errors.hpp"
#include "sectorcast/holtwinters.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace sectorcast {
namespace {

void check_span(const MonthlySeries& full) {
    if (full.size() < kEvaluationSpan) {
        throw InsufficientDataError("evaluation needs " + std::to_string(kEvaluationSpan) +
                                    " months, got " + std::to_string(full.size()));
    }
}

MonthlySeries head(const MonthlySeries& s, std::size_t months) {
    return s.slice(s.start(), s.month_at(months - 1));
}

// Runs `task(k)` for k in [0, count) concurrently; results keep index order.
template <typename Task>
auto parallel_map(std::size_t count, Task task) {
    using Result = decltype(task(std::size_t{}));
    std::vector<std::future<Result>> jobs;
    jobs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) jobs.push_back(std::async(std::launch::async, task, k));
    std::vector<Result> out;
    out.reserve(count);
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

} // namespace

double pct_error(double actual, double forecast) {
    if (actual == 0.0) {
        throw ArgumentError("percentage error undefined for a zero actual value");
    }
    return (forecast - actual) / actual * 100.0;
}

ForecastRecord make_record(const CalendarMonth& month, double actual, double forecast) {
    return ForecastRecord{month, actual, forecast, pct_error(actual, forecast)};
}

std::vector<ForecastRecord> run_method1(const MonthlySeries& full) {
    check_span(full);
    const auto model = hw_fit(head(full, kTrainingSpan));
    const auto forecast = hw_forecast(model, static_cast<int>(kYear));
    std::vector<ForecastRecord> out;
    for (std::size_t h = 0; h < kYear; ++h) {
        const auto month = forecast.month_at(h);
        out.push_back(make_record(month, full.at(month), forecast[h]));
    }
    return out;
}

std::vector<ForecastRecord> run_method2(const MonthlySeries& full) {
    check_span(full);
    return parallel_map(kYear, [&full](std::size_t k) {
        const auto model = hw_fit(head(full, kTrainingSpan + k));
        const auto forecast = hw_forecast(model, 1);
        return make_record(forecast.start(), full[kTrainingSpan + k], forecast[0]);
    });
}

std::vector<TrendForecastRow> run_method3(const MonthlySeries& full) {
    check_span(full);
    const auto past = decompose_additive(head(full, kTrainingSpan));
    const auto actual = decompose_additive(head(full, kEvaluationSpan));

    // trend runs from month 7 of year 1 to month 6 of year 5
    const auto trend = past.trend.present_span();
    const auto forecast = hw_forecast(hw_fit(trend), static_cast<int>(kYear));

    std::vector<TrendForecastRow> out;
    for (std::size_t h = kYear / 2; h < kYear; ++h) {
        const auto month = forecast.month_at(h);
        const auto slot = static_cast<std::size_t>(month.month() - 1);
        const auto actual_trend = actual.trend.at(month);
        if (!actual_trend) {
            throw InsufficientDataError("no actual trend for " + month.to_string());
        }
        const double actual_seasonal = actual.seasonal_indices[slot];
        const double past_seasonal = past.seasonal_indices[slot];
        const double actual_sum = *actual_trend + actual_seasonal;
        const double forecast_sum = forecast[h] + past_seasonal;
        out.push_back(TrendForecastRow{month, *actual_trend, actual_seasonal, actual_sum, forecast[h],
                                       past_seasonal, forecast_sum, pct_error(actual_sum, forecast_sum)});
    }
    return out;
}

std::vector<ArimaForecastRecord> run_method4(const MonthlySeries& full) {
    check_span(full);
    const auto model = auto_arima(head(full, kTrainingSpan));
    const auto forecast = arima_forecast(model, static_cast<int>(kYear));
    std::vector<ArimaForecastRecord> out;
    for (std::size_t h = 0; h < kYear; ++h) {
        const auto month = forecast.month_at(h);
        out.push_back({make_record(month, full.at(month), forecast[h]), model.order});
    }
    return out;
}

std::vector<ArimaForecastRecord> run_method5(const MonthlySeries& full) {
    check_span(full);
    return parallel_map(kYear, [&full](std::size_t k) {
        const auto model = auto_arima(head(full, kTrainingSpan + k));
        const auto forecast = arima_forecast(model, 1);
        return ArimaForecastRecord{make_record(forecast.start(), full[kTrainingSpan + k], forecast[0]), model.order};
    });
}

std::vector<StructuralRow> structural_comparison(const MonthlySeries& window_a, const MonthlySeries& window_b) {
    const auto a = decompose_additive(window_a);
    const auto b = decompose_additive(window_b);
    const auto first = std::max(a.trend.start(), b.trend.start());
    const auto last = std::min(a.trend.end(), b.trend.end());

    std::vector<StructuralRow> out;
    for (auto month = first; month <= last; month = month.next()) {
        const auto ta = a.trend.at(month);
        const auto tb = b.trend.at(month);
        if (!ta || !tb) continue;
        const auto slot = static_cast<std::size_t>(month.month() - 1);
        const double sa = a.seasonal_indices[slot];
        const double sb = b.seasonal_indices[slot];
        const double sum_a = *ta + sa;
        const double sum_b = *tb + sb;
        out.push_back(StructuralRow{month, *ta, sa, sum_a, *tb, sb, sum_b, pct_error(sum_a, sum_b)});
    }
    return out;
}

std::vector<StructuralRow> run_method6(const MonthlySeries& full) {
    check_span(full);
    const auto window_a = head(full, kTrainingSpan);
    const auto window_b = full.slice(full.month_at(kYear), full.month_at(kEvaluationSpan - 1));
    return structural_comparison(window_a, window_b);
}

MethodSummary summarize(const std::vector<ForecastRecord>& records) {
    if (records.size() < 2) {
        throw ArgumentError("a summary needs at least two records");
    }
    std::vector<double> mags;
    mags.reserve(records.size());
    for (const auto& r : records) mags.push_back(std::abs(r.signed_pct_error));
    const auto n = static_cast<double>(mags.size());
    double mean = 0.0;
    for (double m : mags) mean += m;
    mean /= n;
    double ss = 0.0;
    for (double m : mags) ss += (m - mean) * (m - mean);
    const auto [lo, hi] = std::minmax_element(mags.begin(), mags.end());
    return MethodSummary{*lo, *hi, mean, std::sqrt(ss / (n - 1.0))};
}

std::vector<ForecastRecord> records_of(const std::vector<TrendForecastRow>& rows) {
    std::vector<ForecastRecord> out;
    for (const auto& r : rows) out.push_back(r.record());
    return out;
}

std::vector<ForecastRecord> records_of(const std::vector<ArimaForecastRecord>& rows) {
    std::vector<ForecastRecord> out;
    for (const auto& r : rows) out.push_back(r.record);
    return out;
}

std::vector<MethodSummary> EvaluationReport::summaries() const {
    return {summarize(method1), summarize(method2), summarize(records_of(method3)),
            summarize(records_of(method4)), summarize(records_of(method5))};
}

EvaluationReport run_all_methods(const MonthlySeries& full) {
    check_span(full);
    auto m5 = std::async(std::launch::async, run_method5, std::cref(full));
    auto m4 = std::async(std::launch::async, run_method4, std::cref(full));
    EvaluationReport report{run_method1(full), run_method2(full), run_method3(full), {}, {}, run_method6(full)};
    report.method4 = m4.get();
    report.method5 = m5.get();
    return report;
}

} // namespace sectorcast
