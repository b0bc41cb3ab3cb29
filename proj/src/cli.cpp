#include "sectorcast/cli.hpp"

#include "sectorcast/arima.hpp"
#include "sectorcast/decompose.hpp"
#include "sectorcast/errors.hpp"
#include "sectorcast/evaluation.hpp"
#include "sectorcast/holtwinters.hpp"
#include "sectorcast/ingest.hpp"
#include "sectorcast/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace sectorcast::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

report::Style style_of(const RunConfig& c) { return report::Style{c.round}; }

void emit_json(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << '\n'; }

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open input '" + path + "'");
    }
    return in;
}

} // namespace

MonthlySeries load_input(const RunConfig& config) {
    if (config.golden) return golden_auto_series();
    if (!config.input_path) {
        throw UsageError("no input: pass --input PATH or --golden");
    }
    auto in = open_input(*config.input_path);
    std::string first;
    std::getline(in, first);
    in.clear();
    in.seekg(0);
    if (first.find("date") != std::string::npos) {
        return aggregate_monthly(load_daily_csv(in));
    }
    return read_monthly_csv(in);
}

void cmd_ingest(const RunConfig& config, std::ostream& out) {
    const auto series = load_input(config);
    if (config.format == Format::Json) {
        auto values = nlohmann::json::array();
        for (double v : series.values()) values.push_back(config.round ? report::round_to(v, 0) : v);
        emit_json(out, {{"start", series.start().to_string()}, {"values", std::move(values)}});
        return;
    }
    if (config.round) {
        out << "year,month,value\n";
        for (std::size_t t = 0; t < series.size(); ++t) {
            const auto m = series.month_at(t);
            out << m.year() << ',' << m.month() << ',' << static_cast<long long>(report::round_to(series[t], 0))
                << '\n';
        }
        return;
    }
    write_monthly_csv(out, series);
}

void cmd_decompose(const RunConfig& config, std::ostream& out) {
    const auto parts = decompose_additive(load_input(config));
    if (config.format == Format::Json) {
        emit_json(out, report::decomposition_json(parts, style_of(config)));
    } else {
        report::decomposition_csv(out, parts, style_of(config));
    }
}

void cmd_forecast(const RunConfig& config, std::ostream& out) {
    if (config.horizon < 1) {
        throw UsageError("--horizon must be at least 1");
    }
    const auto series = load_input(config);
    const auto train_end = config.train_end.value_or(series.end());
    const auto training = series.slice(series.start(), train_end);

    std::optional<ArimaOrder> order;
    MonthlySeries forecast = [&] {
        if (config.engine == Engine::Arima) {
            const auto model = auto_arima(training);
            order = model.order;
            return arima_forecast(model, config.horizon);
        }
        return hw_forecast(hw_fit(training), config.horizon);
    }();

    std::vector<report::ForecastRow> rows;
    for (std::size_t h = 0; h < forecast.size(); ++h) {
        const auto month = forecast.month_at(h);
        report::ForecastRow row{month, forecast[h], std::nullopt, std::nullopt};
        if (series.contains(month)) {
            row.actual = series.at(month);
            row.pct_error = pct_error(*row.actual, forecast[h]);
        }
        rows.push_back(row);
    }

    if (config.format == Format::Json) {
        nlohmann::json doc{
            {"engine", config.engine == Engine::Arima ? "arima" : "hw"},
            {"train_end", train_end.to_string()},
            {"rows", report::forecast_json(rows, style_of(config))},
        };
        if (order) doc["order"] = {order->p, order->d, order->q};
        emit_json(out, doc);
    } else {
        report::forecast_csv(out, rows, style_of(config));
    }
}

void cmd_evaluate(const RunConfig& config, std::ostream& out) {
    if (!config.all_methods && (!config.method || *config.method < 1 || *config.method > 6)) {
        throw UsageError("--method must be 1..6 or all");
    }
    const auto series = load_input(config);
    const auto style = style_of(config);
    const bool json = config.format == Format::Json;

    if (config.all_methods) {
        const auto r = run_all_methods(series);
        const auto summaries = r.summaries();
        if (json) {
            emit_json(out, {
                               {"method1", report::records_json(r.method1, style)},
                               {"method2", report::records_json(r.method2, style)},
                               {"method3", report::trend_forecast_json(r.method3, style)},
                               {"method4", report::arima_records_json(r.method4, style)},
                               {"method5", report::arima_records_json(r.method5, style)},
                               {"method6", report::structural_json(r.method6, style)},
                               {"summary", report::summary_json(summaries, style)},
                           });
            return;
        }
        out << "# method 1\n";
        report::records_csv(out, r.method1, style);
        out << "\n# method 2\n";
        report::records_csv(out, r.method2, style);
        out << "\n# method 3\n";
        report::trend_forecast_csv(out, r.method3, style);
        out << "\n# method 4\n";
        report::records_csv(out, records_of(r.method4), style);
        out << "\n# method 5\n";
        report::records_csv(out, records_of(r.method5), style);
        out << "\n# method 6\n";
        report::structural_csv(out, r.method6, style);
        out << "\n# summary\n";
        report::summary_csv(out, summaries, style);
        return;
    }

    switch (*config.method) {
    case 1:
    case 2: {
        const auto rows = *config.method == 1 ? run_method1(series) : run_method2(series);
        if (json) emit_json(out, report::records_json(rows, style));
        else report::records_csv(out, rows, style);
        break;
    }
    case 3: {
        const auto rows = run_method3(series);
        if (json) emit_json(out, report::trend_forecast_json(rows, style));
        else report::trend_forecast_csv(out, rows, style);
        break;
    }
    case 4:
    case 5: {
        const auto rows = *config.method == 4 ? run_method4(series) : run_method5(series);
        if (json) emit_json(out, report::arima_records_json(rows, style));
        else report::records_csv(out, records_of(rows), style);
        break;
    }
    default: {
        const auto rows = run_method6(series);
        if (json) emit_json(out, report::structural_json(rows, style));
        else report::structural_csv(out, rows, style);
        break;
    }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monthly index decomposition and forecasting"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "csv";
    std::string engine = "hw";
    std::string method;
    std::string train_end;
    std::string input;

    auto add_common = [&](CLI::App* sub) {
        auto* in = sub->add_option("--input", input, "Daily (date,value) or monthly (year,month,value) CSV");
        auto* golden = sub->add_flag("--golden", config.golden, "Use the embedded Auto sector index series");
        in->excludes(golden);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--round", config.round, "Integers for index levels, two decimals for percentages");
        sub->add_option("--output", config.output_path, "Write the report to PATH instead of stdout");
    };

    auto* ingest = app.add_subcommand("ingest", "Aggregate daily observations to monthly means");
    add_common(ingest);
    auto* decompose = app.add_subcommand("decompose", "Trend / seasonal / random decomposition");
    add_common(decompose);
    auto* forecast = app.add_subcommand("forecast", "Forecast with Holt-Winters or ARIMA");
    add_common(forecast);
    forecast->add_option("--engine", engine, "hw or arima")->check(CLI::IsMember({"hw", "arima"}));
    forecast->add_option("--horizon", config.horizon, "Months ahead");
    forecast->add_option("--train-end", train_end, "Last training month, YYYY-MM");
    auto* evaluate = app.add_subcommand("evaluate", "Run evaluation methods 1-6 on a six-year series");
    add_common(evaluate);
    evaluate->add_option("--method", method, "1..6 or all")->required();

    std::vector<const char*> argv{"sectorcast"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (ingest->parsed()) config.command = Command::Ingest;
    if (decompose->parsed()) config.command = Command::Decompose;
    if (forecast->parsed()) config.command = Command::Forecast;
    if (evaluate->parsed()) config.command = Command::Evaluate;
    if (!input.empty()) config.input_path = input;
    config.format = format == "json" ? Format::Json : Format::Csv;
    config.engine = engine == "arima" ? Engine::Arima : Engine::HoltWinters;

    std::ostringstream buffer;
    try {
        if (!config.golden && !config.input_path) {
            throw UsageError("no input: pass --input PATH or --golden");
        }
        if (!train_end.empty()) {
            config.train_end = CalendarMonth::parse(train_end);
        }
        if (config.command == Command::Evaluate) {
            if (method == "all") {
                config.all_methods = true;
            } else if (method.size() == 1 && method[0] >= '1' && method[0] <= '6') {
                config.method = method[0] - '0';
            } else {
                throw UsageError("--method must be 1..6 or all, got '" + method + "'");
            }
        }
        switch (config.command) {
        case Command::Ingest: cmd_ingest(config, buffer); break;
        case Command::Decompose: cmd_decompose(config, buffer); break;
        case Command::Forecast: cmd_forecast(config, buffer); break;
        case Command::Evaluate: cmd_evaluate(config, buffer); break;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        file << buffer.str();
        if (!file.flush()) {
            err << "error: cannot write '" << *config.output_path << "'\n";
            return kExitFailure;
        }
    } else {
        out << buffer.str();
        out.flush();
    }
    return kExitOk;
}

} // namespace sectorcast::cli
