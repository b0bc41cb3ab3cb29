#include "sectorcast/series.hpp"

#include "sectorcast/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sectorcast {

CalendarMonth::CalendarMonth(int year, int month) : year_(year), month_(month) {
    if (month < 1 || month > 12) {
        throw ArgumentError("month must be in 1..12, got " + std::to_string(month));
    }
}

CalendarMonth CalendarMonth::plus(long months) const {
    const long index = static_cast<long>(year_) * 12 + (month_ - 1) + months;
    // floor division so negative offsets wrap into the previous year
    long year = index / 12;
    long month0 = index % 12;
    if (month0 < 0) {
        month0 += 12;
        --year;
    }
    return CalendarMonth(static_cast<int>(year), static_cast<int>(month0) + 1);
}

long CalendarMonth::months_until(const CalendarMonth& other) const noexcept {
    return (static_cast<long>(other.year_) - year_) * 12 + (other.month_ - month_);
}

std::string CalendarMonth::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year_, month_);
    return buf;
}

CalendarMonth CalendarMonth::parse(const std::string& text) {
    int year = 0;
    int month = 0;
    char tail = 0;
    if (text.size() != 7 || std::sscanf(text.c_str(), "%4d-%2d%c", &year, &month, &tail) != 2) {
        throw ArgumentError("expected YYYY-MM, got '" + text + "'");
    }
    return CalendarMonth(year, month);
}

std::size_t span_length(const CalendarMonth& from, const CalendarMonth& to) {
    if (to < from) {
        throw ArgumentError("range end " + to.to_string() + " precedes start " + from.to_string());
    }
    return static_cast<std::size_t>(from.months_until(to)) + 1;
}

// ---------------------------------------------------------------------------

MonthlySeries::MonthlySeries(CalendarMonth start, std::vector<double> values)
    : start_(start), values_(std::move(values)) {
    if (values_.empty()) {
        throw ArgumentError("monthly series must hold at least one value");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ArgumentError("non-finite value at " + start_.plus(static_cast<long>(i)).to_string());
        }
    }
}

double MonthlySeries::at(const CalendarMonth& month) const { return values_[offset_of(month)]; }

CalendarMonth MonthlySeries::month_at(std::size_t offset) const {
    if (offset >= values_.size()) {
        throw RangeError("offset " + std::to_string(offset) + " outside series of length " +
                         std::to_string(values_.size()));
    }
    return start_.plus(static_cast<long>(offset));
}

bool MonthlySeries::contains(const CalendarMonth& month) const noexcept {
    const long k = start_.months_until(month);
    return k >= 0 && static_cast<std::size_t>(k) < values_.size();
}

std::size_t MonthlySeries::offset_of(const CalendarMonth& month) const {
    if (!contains(month)) {
        throw RangeError(month.to_string() + " outside series span " + start_.to_string() + ".." +
                         end().to_string());
    }
    return static_cast<std::size_t>(start_.months_until(month));
}

MonthlySeries MonthlySeries::slice(const CalendarMonth& from, const CalendarMonth& to) const {
    if (to < from) {
        throw ArgumentError("slice end " + to.to_string() + " precedes start " + from.to_string());
    }
    const auto first = offset_of(from);
    const auto last = offset_of(to);
    return MonthlySeries(from, std::vector<double>(values_.begin() + static_cast<long>(first),
                                                   values_.begin() + static_cast<long>(last) + 1));
}

MonthlySeries MonthlySeries::affine(double scale, double shift) const {
    std::vector<double> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(),
                   [&](double v) { return scale * v + shift; });
    return MonthlySeries(start_, std::move(out));
}

// ---------------------------------------------------------------------------

PartialMonthlySeries::PartialMonthlySeries(CalendarMonth start,
                                           std::vector<std::optional<double>> values)
    : start_(start), values_(std::move(values)) {
    if (present_count() == 0) {
        throw ArgumentError("partial series must hold at least one present value");
    }
}

std::optional<double> PartialMonthlySeries::at(const CalendarMonth& month) const {
    const long k = start_.months_until(month);
    if (k < 0 || static_cast<std::size_t>(k) >= values_.size()) {
        throw RangeError(month.to_string() + " outside series span");
    }
    return values_[static_cast<std::size_t>(k)];
}

CalendarMonth PartialMonthlySeries::month_at(std::size_t offset) const {
    if (offset >= values_.size()) {
        throw RangeError("offset " + std::to_string(offset) + " outside series");
    }
    return start_.plus(static_cast<long>(offset));
}

std::size_t PartialMonthlySeries::present_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

MonthlySeries PartialMonthlySeries::present_span() const {
    const auto first = std::find_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
    const auto last = std::find_if(values_.rbegin(), values_.rend(), [](const auto& v) { return v.has_value(); });
    std::vector<double> out;
    for (auto it = first; it != last.base(); ++it) {
        if (!it->has_value()) {
            throw DataError("present values are not contiguous");
        }
        out.push_back(**it);
    }
    return MonthlySeries(start_.plus(first - values_.begin()), std::move(out));
}

} // namespace sectorcast
