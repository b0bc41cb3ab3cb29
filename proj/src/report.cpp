#include "sectorcast/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace sectorcast::report {
namespace {

enum class Kind { Level, Percent };

int decimals_for(Kind kind, Style style) {
    if (!style.round) return 6;
    return kind == Kind::Level ? 0 : 2;
}

std::string fmt(double value, Kind kind, Style style) {
    const int decimals = decimals_for(kind, style);
    const double v = round_to(value, decimals);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v == 0.0 ? 0.0 : v); // no "-0"
    return buf;
}

std::string fmt(const std::optional<double>& value, Kind kind, Style style) {
    return value ? fmt(*value, kind, style) : std::string();
}

nlohmann::json num(double value, Kind kind, Style style) {
    if (!std::isfinite(value)) return nullptr;
    return style.round ? round_to(value, decimals_for(kind, style)) : value;
}

nlohmann::json num(const std::optional<double>& value, Kind kind, Style style) {
    return value ? num(*value, kind, style) : nlohmann::json(nullptr);
}

void month_cells(std::ostream& out, const CalendarMonth& m) { out << m.year() << ',' << m.month(); }

nlohmann::json record_json(const ForecastRecord& r, Style style) {
    return {
        {"year", r.month.year()},
        {"month", r.month.month()},
        {"actual", num(r.actual, Kind::Level, style)},
        {"forecast", num(r.forecast, Kind::Level, style)},
        {"pct_error", num(r.signed_pct_error, Kind::Percent, style)},
    };
}

} // namespace

double round_to(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

void decomposition_csv(std::ostream& out, const Decomposition& d, Style style) {
    out << "year,month,aggregate,trend,seasonal,random\n";
    for (std::size_t t = 0; t < d.observed.size(); ++t) {
        month_cells(out, d.observed.month_at(t));
        out << ',' << fmt(d.observed[t], Kind::Level, style) << ',' << fmt(d.trend[t], Kind::Level, style)
            << ',' << fmt(d.seasonal[t], Kind::Level, style) << ',' << fmt(d.random[t], Kind::Level, style)
            << '\n';
    }
}

void forecast_csv(std::ostream& out, const std::vector<ForecastRow>& rows, Style style) {
    bool with_actuals = false;
    for (const auto& r : rows) with_actuals = with_actuals || r.actual.has_value();
    out << "year,month,forecast" << (with_actuals ? ",actual,pct_error" : "") << '\n';
    for (const auto& r : rows) {
        month_cells(out, r.month);
        out << ',' << fmt(r.forecast, Kind::Level, style);
        if (with_actuals) {
            out << ',' << fmt(r.actual, Kind::Level, style) << ',' << fmt(r.pct_error, Kind::Percent, style);
        }
        out << '\n';
    }
}

void records_csv(std::ostream& out, const std::vector<ForecastRecord>& rows, Style style) {
    out << "year,month,actual,forecast,pct_error\n";
    for (const auto& r : rows) {
        month_cells(out, r.month);
        out << ',' << fmt(r.actual, Kind::Level, style) << ',' << fmt(r.forecast, Kind::Level, style) << ','
            << fmt(r.signed_pct_error, Kind::Percent, style) << '\n';
    }
}

void trend_forecast_csv(std::ostream& out, const std::vector<TrendForecastRow>& rows, Style style) {
    out << "year,month,actual_trend,actual_seasonal,actual_sum,forecast_trend,past_seasonal,forecast_sum,"
           "pct_error\n";
    for (const auto& r : rows) {
        month_cells(out, r.month);
        for (double v : {r.actual_trend, r.actual_seasonal, r.actual_sum, r.forecast_trend, r.past_seasonal,
                         r.forecast_sum}) {
            out << ',' << fmt(v, Kind::Level, style);
        }
        out << ',' << fmt(r.pct_error, Kind::Percent, style) << '\n';
    }
}

void structural_csv(std::ostream& out, const std::vector<StructuralRow>& rows, Style style) {
    out << "year,month,trend_a,seasonal_a,sum_a,trend_b,seasonal_b,sum_b,pct_variation\n";
    for (const auto& r : rows) {
        month_cells(out, r.month);
        for (double v : {r.trend_a, r.seasonal_a, r.sum_a, r.trend_b, r.seasonal_b, r.sum_b}) {
            out << ',' << fmt(v, Kind::Level, style);
        }
        out << ',' << fmt(r.pct_variation, Kind::Percent, style) << '\n';
    }
}

void summary_csv(std::ostream& out, const std::vector<MethodSummary>& summaries, Style style) {
    out << "method,min_error,max_error,mean_error,sd_error\n";
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        const auto& s = summaries[i];
        out << (i + 1) << ',' << fmt(s.min_abs, Kind::Percent, style) << ',' << fmt(s.max_abs, Kind::Percent, style)
            << ',' << fmt(s.mean_abs, Kind::Percent, style) << ',' << fmt(s.sd_abs, Kind::Percent, style) << '\n';
    }
}

nlohmann::json decomposition_json(const Decomposition& d, Style style) {
    nlohmann::json aggregate = nlohmann::json::array();
    nlohmann::json trend = nlohmann::json::array();
    nlohmann::json seasonal = nlohmann::json::array();
    nlohmann::json random = nlohmann::json::array();
    for (std::size_t t = 0; t < d.observed.size(); ++t) {
        aggregate.push_back(num(d.observed[t], Kind::Level, style));
        trend.push_back(num(d.trend[t], Kind::Level, style));
        seasonal.push_back(num(d.seasonal[t], Kind::Level, style));
        random.push_back(num(d.random[t], Kind::Level, style));
    }
    return {
        {"start", d.observed.start().to_string()},
        {"aggregate", std::move(aggregate)},
        {"trend", std::move(trend)},
        {"seasonal", std::move(seasonal)},
        {"random", std::move(random)},
    };
}

nlohmann::json forecast_json(const std::vector<ForecastRow>& rows, Style style) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row{{"year", r.month.year()}, {"month", r.month.month()},
                           {"forecast", num(r.forecast, Kind::Level, style)}};
        if (r.actual) {
            row["actual"] = num(r.actual, Kind::Level, style);
            row["pct_error"] = num(r.pct_error, Kind::Percent, style);
        }
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json records_json(const std::vector<ForecastRecord>& rows, Style style) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) out.push_back(record_json(r, style));
    return out;
}

nlohmann::json arima_records_json(const std::vector<ArimaForecastRecord>& rows, Style style) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        auto row = record_json(r.record, style);
        row["order"] = {r.order.p, r.order.d, r.order.q};
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json trend_forecast_json(const std::vector<TrendForecastRow>& rows, Style style) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({
            {"year", r.month.year()},
            {"month", r.month.month()},
            {"actual_trend", num(r.actual_trend, Kind::Level, style)},
            {"actual_seasonal", num(r.actual_seasonal, Kind::Level, style)},
            {"actual_sum", num(r.actual_sum, Kind::Level, style)},
            {"forecast_trend", num(r.forecast_trend, Kind::Level, style)},
            {"past_seasonal", num(r.past_seasonal, Kind::Level, style)},
            {"forecast_sum", num(r.forecast_sum, Kind::Level, style)},
            {"pct_error", num(r.pct_error, Kind::Percent, style)},
        });
    }
    return out;
}

nlohmann::json structural_json(const std::vector<StructuralRow>& rows, Style style) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({
            {"year", r.month.year()},
            {"month", r.month.month()},
            {"trend_a", num(r.trend_a, Kind::Level, style)},
            {"seasonal_a", num(r.seasonal_a, Kind::Level, style)},
            {"sum_a", num(r.sum_a, Kind::Level, style)},
            {"trend_b", num(r.trend_b, Kind::Level, style)},
            {"seasonal_b", num(r.seasonal_b, Kind::Level, style)},
            {"sum_b", num(r.sum_b, Kind::Level, style)},
            {"pct_variation", num(r.pct_variation, Kind::Percent, style)},
        });
    }
    return out;
}

nlohmann::json summary_json(const std::vector<MethodSummary>& summaries, Style style) {
    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        const auto& s = summaries[i];
        out.push_back({
            {"method", i + 1},
            {"min_error", num(s.min_abs, Kind::Percent, style)},
            {"max_error", num(s.max_abs, Kind::Percent, style)},
            {"mean_error", num(s.mean_abs, Kind::Percent, style)},
            {"sd_error", num(s.sd_abs, Kind::Percent, style)},
        });
    }
    return out;
}

} // namespace sectorcast::report
