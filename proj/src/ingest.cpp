#include "sectorcast/ingest.hpp"

#include "sectorcast/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace sectorcast {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    // from_chars rejects a leading '+'; strtod is locale sensitive. Accept '+' explicitly.
    if (s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return m == 2 && is_leap(y) ? 29 : days[m - 1];
}

bool parse_date(std::string_view s, Date& out) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    if (!parse_int(s.substr(0, 4), out.year) || !parse_int(s.substr(5, 2), out.month) ||
        !parse_int(s.substr(8, 2), out.day)) {
        return false;
    }
    return out.month >= 1 && out.month <= 12 && out.day >= 1 &&
           out.day <= days_in_month(out.year, out.month);
}

std::string format_date(const Date& d) {
    std::ostringstream os;
    os << std::setfill('0') << std::setw(4) << d.year << '-' << std::setw(2) << d.month << '-'
       << std::setw(2) << d.day;
    return os.str();
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        fields.push_back(trim(line.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return fields;
}

} // namespace

std::vector<DailyObservation> load_daily_csv(std::istream& source) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<std::pair<DailyObservation, std::size_t>> rows;

    while (std::getline(source, line)) {
        ++line_no;
        const auto text = trim(line);
        if (!header_seen) {
            // tolerate a UTF-8 BOM on the header
            auto header = text;
            if (header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
            const auto fields = split_fields(header);
            if (fields.size() != 2 || fields[0] != "date" || fields[1] != "value") {
                throw ParseError(line_no, "expected header 'date,value'");
            }
            header_seen = true;
            continue;
        }
        if (text.empty()) continue;
        const auto fields = split_fields(text);
        if (fields.size() != 2) {
            throw ParseError(line_no, "expected 2 fields, got " + std::to_string(fields.size()));
        }
        DailyObservation obs{};
        if (!parse_date(fields[0], obs.date)) {
            throw ParseError(line_no, "invalid date '" + std::string(fields[0]) + "'");
        }
        if (!parse_double(fields[1], obs.value)) {
            throw ParseError(line_no, "invalid value '" + std::string(fields[1]) + "'");
        }
        rows.emplace_back(obs, line_no);
    }
    if (!header_seen) {
        throw DataError("empty file");
    }
    if (rows.empty()) {
        throw DataError("no observations");
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first.date < b.first.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].first.date == rows[i - 1].first.date) {
            throw DataError("duplicate date " + format_date(rows[i].first.date) + " (lines " +
                            std::to_string(rows[i - 1].second) + " and " +
                            std::to_string(rows[i].second) + ")");
        }
    }

    std::vector<DailyObservation> out;
    out.reserve(rows.size());
    for (const auto& [obs, _] : rows) out.push_back(obs);
    return out;
}

MonthlySeries aggregate_monthly(const std::vector<DailyObservation>& observations) {
    if (observations.empty()) {
        throw DataError("no observations to aggregate");
    }
    struct Acc {
        double sum = 0.0;
        std::size_t count = 0;
    };
    std::map<CalendarMonth, Acc> buckets;
    for (const auto& obs : observations) {
        auto& acc = buckets[CalendarMonth(obs.date.year, obs.date.month)];
        acc.sum += obs.value;
        ++acc.count;
    }

    const auto first = buckets.begin()->first;
    const auto last = buckets.rbegin()->first;
    std::vector<double> values;
    values.reserve(span_length(first, last));
    for (auto m = first; m <= last; m = m.next()) {
        const auto it = buckets.find(m);
        if (it == buckets.end()) {
            throw GapError("no observations in " + m.to_string());
        }
        values.push_back(it->second.sum / static_cast<double>(it->second.count));
    }
    return MonthlySeries(first, std::move(values));
}

MonthlySeries golden_auto_series() {
    return MonthlySeries(CalendarMonth(2010, 1),
                         {
                             7380,  6958,  7584,  7702,  7581,  8034,  8315,  8710,  9269,  9844,  10127, 10100,
                             9426,  8547,  8806,  9515,  9061,  8626,  8902,  8390,  8656,  8866,  8771,  8359,
                             8576,  9883,  9979,  10363, 9568,  9154,  9215,  9394,  9841,  10299, 10620, 11139,
                             11379, 10809, 10499, 10164, 11091, 10731, 10672, 10255, 10893, 11776, 12103, 12247,
                             11983, 11985, 12783, 13437, 14078, 15118, 15688, 16418, 17798, 17700, 18712, 18752,
                             18907, 19565, 19397, 19041, 18799, 18357, 18806, 18918, 17348, 17738, 18535, 18317,
                         });
}

void write_monthly_csv(std::ostream& out, const MonthlySeries& series) {
    out << "year,month,value\n";
    const auto saved = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto m = series.month_at(i);
        out << m.year() << ',' << m.month() << ',' << series[i] << '\n';
    }
    out.flags(saved);
    out.precision(precision);
}

MonthlySeries read_monthly_csv(std::istream& source) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::optional<CalendarMonth> start;
    std::optional<CalendarMonth> expected;
    std::vector<double> values;
    while (std::getline(source, line)) {
        ++line_no;
        const auto text = trim(line);
        if (!header_seen) {
            const auto fields = split_fields(text);
            if (fields.size() != 3 || fields[0] != "year" || fields[1] != "month" || fields[2] != "value") {
                throw ParseError(line_no, "expected header 'year,month,value'");
            }
            header_seen = true;
            continue;
        }
        if (text.empty()) continue;
        const auto fields = split_fields(text);
        int year = 0;
        int month = 0;
        double value = 0.0;
        if (fields.size() != 3 || !parse_int(fields[0], year) || !parse_int(fields[1], month) ||
            month < 1 || month > 12 || !parse_double(fields[2], value)) {
            throw ParseError(line_no, "expected 'year,month,value'");
        }
        const CalendarMonth m(year, month);
        if (expected && m != *expected) {
            throw GapError("expected " + expected->to_string() + " at line " + std::to_string(line_no) +
                           ", got " + m.to_string());
        }
        if (!start) start = m;
        expected = m.next();
        values.push_back(value);
    }
    if (!start) {
        throw DataError("no monthly values");
    }
    return MonthlySeries(*start, std::move(values));
}

} // namespace sectorcast
