#pragma once

#include "sectorcast/arima.hpp"
#include "sectorcast/series.hpp"

#include <optional>
#include <vector>

namespace sectorcast {

/// Evaluation protocols over a six-year monthly series: years 1-5 train, year 6 tests.
/// Year boundaries are counted from the series start, not fixed calendar years.
inline constexpr std::size_t kYear = 12;
inline constexpr std::size_t kEvaluationSpan = 6 * kYear;
inline constexpr std::size_t kTrainingSpan = 5 * kYear;

struct ForecastRecord {
    CalendarMonth month;
    double actual;
    double forecast;
    double signed_pct_error; ///< (forecast - actual) / actual * 100
};

/// Statistics of |signed_pct_error|. The SD uses the n-1 denominator.
struct MethodSummary {
    double min_abs;
    double max_abs;
    double mean_abs;
    double sd_abs;
};

/// One row of the trend-forecasting comparison (actual vs forecast trend + seasonal).
struct TrendForecastRow {
    CalendarMonth month;
    double actual_trend;
    double actual_seasonal;
    double actual_sum;
    double forecast_trend;
    double past_seasonal;
    double forecast_sum;
    double pct_error; ///< (forecast_sum - actual_sum) / actual_sum * 100

    ForecastRecord record() const { return {month, actual_sum, forecast_sum, pct_error}; }
};

/// Trend + seasonal from two overlapping decomposition windows for one month.
struct StructuralRow {
    CalendarMonth month;
    double trend_a;
    double seasonal_a;
    double sum_a;
    double trend_b;
    double seasonal_b;
    double sum_b;
    double pct_variation; ///< (sum_b - sum_a) / sum_a * 100
};

/// ARIMA forecast record with the order chosen for it.
struct ArimaForecastRecord {
    ForecastRecord record;
    ArimaOrder order;
};

/// (forecast - actual) / actual * 100. Throws ArgumentError when actual is zero.
double pct_error(double actual, double forecast);

ForecastRecord make_record(const CalendarMonth& month, double actual, double forecast);

/// Holt-Winters fitted on years 1-5, one 12-month forecast.
std::vector<ForecastRecord> run_method1(const MonthlySeries& full);
/// Holt-Winters refitted on an expanding window before each one-month forecast.
std::vector<ForecastRecord> run_method2(const MonthlySeries& full);
/// Holt-Winters on the years 1-5 trend component, forecast steps 7-12 plus past seasonal
/// offsets, compared against trend + seasonal of the full-series decomposition.
std::vector<TrendForecastRow> run_method3(const MonthlySeries& full);
/// Automatic ARIMA on years 1-5, one 12-month forecast.
std::vector<ArimaForecastRecord> run_method4(const MonthlySeries& full);
/// Automatic ARIMA re-selected and refitted before each one-month forecast.
std::vector<ArimaForecastRecord> run_method5(const MonthlySeries& full);
/// Decomposes years 1-5 and years 2-6 and compares trend + seasonal where both trends exist.
std::vector<StructuralRow> run_method6(const MonthlySeries& full);
/// The comparison behind run_method6 for two arbitrary windows.
std::vector<StructuralRow> structural_comparison(const MonthlySeries& window_a, const MonthlySeries& window_b);

/// Requires at least two records.
MethodSummary summarize(const std::vector<ForecastRecord>& records);

std::vector<ForecastRecord> records_of(const std::vector<TrendForecastRow>& rows);
std::vector<ForecastRecord> records_of(const std::vector<ArimaForecastRecord>& rows);

/// Output of every method on one series.
struct EvaluationReport {
    std::vector<ForecastRecord> method1;
    std::vector<ForecastRecord> method2;
    std::vector<TrendForecastRow> method3;
    std::vector<ArimaForecastRecord> method4;
    std::vector<ArimaForecastRecord> method5;
    std::vector<StructuralRow> method6;

    /// Summaries of methods 1-5, in method order.
    std::vector<MethodSummary> summaries() const;
};

EvaluationReport run_all_methods(const MonthlySeries& full);

} // namespace sectorcast
