#pragma once

#include "sectorcast/decompose.hpp"
#include "sectorcast/evaluation.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sectorcast::report {

/// Numbers are printed with six decimals; `round` switches to the published
/// presentation (levels as integers, percentages with two decimals).
struct Style {
    bool round = false;
};

/// Half-away-from-zero rounding to `decimals` places.
double round_to(double value, int decimals);

struct ForecastRow {
    CalendarMonth month;
    double forecast;
    std::optional<double> actual;
    std::optional<double> pct_error;
};

// CSV writers. Absent values are written as empty cells.
void decomposition_csv(std::ostream& out, const Decomposition& d, Style style);
void forecast_csv(std::ostream& out, const std::vector<ForecastRow>& rows, Style style);
void records_csv(std::ostream& out, const std::vector<ForecastRecord>& rows, Style style);
void trend_forecast_csv(std::ostream& out, const std::vector<TrendForecastRow>& rows, Style style);
void structural_csv(std::ostream& out, const std::vector<StructuralRow>& rows, Style style);
/// `method,min_error,max_error,mean_error,sd_error`, one row per method 1-5.
void summary_csv(std::ostream& out, const std::vector<MethodSummary>& summaries, Style style);

// JSON documents.
nlohmann::json decomposition_json(const Decomposition& d, Style style);
nlohmann::json forecast_json(const std::vector<ForecastRow>& rows, Style style);
nlohmann::json records_json(const std::vector<ForecastRecord>& rows, Style style);
nlohmann::json arima_records_json(const std::vector<ArimaForecastRecord>& rows, Style style);
nlohmann::json trend_forecast_json(const std::vector<TrendForecastRow>& rows, Style style);
nlohmann::json structural_json(const std::vector<StructuralRow>& rows, Style style);
nlohmann::json summary_json(const std::vector<MethodSummary>& summaries, Style style);

} // namespace sectorcast::report
