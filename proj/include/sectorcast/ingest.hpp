#pragma once

#include "sectorcast/series.hpp"

#include <iosfwd>
#include <vector>

namespace sectorcast {

struct Date {
    int year;
    int month;
    int day;

    friend auto operator<=>(const Date&, const Date&) = default;
};

struct DailyObservation {
    Date date;
    double value;
};

/// Parses `date,value` CSV (ISO dates, LF or CRLF). Result is sorted by date.
/// Throws ParseError (with line number) on malformed rows and DataError on
/// duplicate dates or a file without observations.
std::vector<DailyObservation> load_daily_csv(std::istream& source);

/// Arithmetic mean of the trading days in each calendar month.
/// Throws GapError naming the first interior month with no observations.
MonthlySeries aggregate_monthly(const std::vector<DailyObservation>& observations);

/// Monthly averages of the Auto sector index, Jan 2010 .. Dec 2015.
MonthlySeries golden_auto_series();

/// `year,month,value` with a header row.
void write_monthly_csv(std::ostream& out, const MonthlySeries& series);
/// Reads the `year,month,value` format back. Rows must be consecutive months.
MonthlySeries read_monthly_csv(std::istream& source);

} // namespace sectorcast
