#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sectorcast {

/// A (year, month) pair, month in 1..12. Ordered lexicographically.
class CalendarMonth {
public:
    CalendarMonth(int year, int month);

    int year() const noexcept { return year_; }
    int month() const noexcept { return month_; }

    /// Month advanced by `months` (may be negative).
    CalendarMonth plus(long months) const;
    CalendarMonth next() const { return plus(1); }

    /// Signed number of months from `*this` to `other`.
    long months_until(const CalendarMonth& other) const noexcept;

    /// "YYYY-MM"
    std::string to_string() const;
    /// Parses "YYYY-MM"; throws ArgumentError on malformed text.
    static CalendarMonth parse(const std::string& text);

    friend auto operator<=>(const CalendarMonth&, const CalendarMonth&) = default;
    friend bool operator==(const CalendarMonth&, const CalendarMonth&) = default;

private:
    int year_;
    int month_;
};

/// Gap-free monthly series of finite values. Value k belongs to start().plus(k).
class MonthlySeries {
public:
    MonthlySeries(CalendarMonth start, std::vector<double> values);

    CalendarMonth start() const noexcept { return start_; }
    CalendarMonth end() const { return start_.plus(static_cast<long>(values_.size()) - 1); }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }

    double operator[](std::size_t offset) const { return values_[offset]; }
    /// Value at a calendar month; throws RangeError outside the span.
    double at(const CalendarMonth& month) const;

    CalendarMonth month_at(std::size_t offset) const;
    /// Offset of a calendar month; throws RangeError outside the span.
    std::size_t offset_of(const CalendarMonth& month) const;
    bool contains(const CalendarMonth& month) const noexcept;

    /// Inclusive sub-series [from, to].
    MonthlySeries slice(const CalendarMonth& from, const CalendarMonth& to) const;

    /// Elementwise affine map a*x + b.
    MonthlySeries affine(double scale, double shift) const;

    friend bool operator==(const MonthlySeries&, const MonthlySeries&) = default;

private:
    CalendarMonth start_;
    std::vector<double> values_;
};

/// Monthly series with explicitly absent slots (e.g. the truncated ends of a moving average).
class PartialMonthlySeries {
public:
    PartialMonthlySeries(CalendarMonth start, std::vector<std::optional<double>> values);

    CalendarMonth start() const noexcept { return start_; }
    CalendarMonth end() const { return start_.plus(static_cast<long>(values_.size()) - 1); }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<std::optional<double>>& values() const noexcept { return values_; }

    const std::optional<double>& operator[](std::size_t offset) const { return values_[offset]; }
    std::optional<double> at(const CalendarMonth& month) const;
    CalendarMonth month_at(std::size_t offset) const;

    std::size_t present_count() const noexcept;
    /// The contiguous run of present values, provided the present slots form one block.
    /// Throws DataError if present values are interleaved with absent ones.
    MonthlySeries present_span() const;

    friend bool operator==(const PartialMonthlySeries&, const PartialMonthlySeries&) = default;

private:
    CalendarMonth start_;
    std::vector<std::optional<double>> values_;
};

/// Number of months in the inclusive range [from, to].
std::size_t span_length(const CalendarMonth& from, const CalendarMonth& to);

} // namespace sectorcast
