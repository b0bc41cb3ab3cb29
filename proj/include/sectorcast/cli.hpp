#pragma once

#include "sectorcast/series.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sectorcast::cli {

enum class Command { Ingest, Decompose, Forecast, Evaluate };
enum class Engine { HoltWinters, Arima };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::Decompose;
    std::optional<std::string> input_path; ///< exclusive with `golden`
    bool golden = false;
    std::optional<int> method;             ///< 1..6; empty with `all_methods` means every method
    bool all_methods = false;
    std::optional<CalendarMonth> train_end;
    Engine engine = Engine::HoltWinters;
    int horizon = 12;
    Format format = Format::Csv;
    bool round = false;
    std::optional<std::string> output_path;
};

/// Parses `args` (without the program name) and runs the command.
/// Data goes to `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Loads the configured input: the embedded dataset, a daily `date,value` file
/// (aggregated to monthly means) or a monthly `year,month,value` file.
MonthlySeries load_input(const RunConfig& config);

// Each command renders its complete report into `out`; exceptions propagate.
void cmd_ingest(const RunConfig& config, std::ostream& out);
void cmd_decompose(const RunConfig& config, std::ostream& out);
void cmd_forecast(const RunConfig& config, std::ostream& out);
void cmd_evaluate(const RunConfig& config, std::ostream& out);

} // namespace sectorcast::cli
