#pragma once

#include "sectorcast/series.hpp"

#include <array>

namespace sectorcast {

/// Seasonal offsets indexed by calendar month (index 0 = January).
using SeasonalIndices = std::array<double, 12>;

/// Classical additive decomposition: observed = trend + seasonal + random.
/// Trend and random are absent for the first and last six months.
struct Decomposition {
    MonthlySeries observed;
    PartialMonthlySeries trend;
    SeasonalIndices seasonal_indices;
    MonthlySeries seasonal;
    PartialMonthlySeries random;
};

/// 2x`period` centered moving average (half weights on the two end points).
/// Defined for offsets period/2 .. size-period/2-1, absent elsewhere.
PartialMonthlySeries centered_ma(const MonthlySeries& series, int period = 12);

/// Mean detrended value per calendar month, re-centered so the twelve indices sum to zero.
SeasonalIndices seasonal_indices(const MonthlySeries& observed, const PartialMonthlySeries& trend);

/// Requires at least 24 months.
Decomposition decompose_additive(const MonthlySeries& series);

} // namespace sectorcast
