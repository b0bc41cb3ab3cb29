#pragma once

#include "sectorcast/series.hpp"

#include <span>
#include <string>
#include <vector>

namespace sectorcast {

struct ArimaOrder {
    int p = 0; ///< autoregressive lags
    int d = 0; ///< differencing rounds
    int q = 0; ///< moving-average lags

    std::string to_string() const;
    friend bool operator==(const ArimaOrder&, const ArimaOrder&) = default;
};

inline constexpr int kMaxArOrder = 5;
inline constexpr int kMaxDifferencing = 2;
inline constexpr int kMaxMaOrder = 5;
/// Coefficients are searched in [-kCoefficientBound, kCoefficientBound].
inline constexpr double kCoefficientBound = 0.99;

enum class InformationCriterion { Aic, Aicc };

struct ArimaModel {
    ArimaOrder order;
    std::vector<double> ar; ///< phi_1..phi_p
    std::vector<double> ma; ///< theta_1..theta_q
    double mean = 0.0;      ///< sample mean removed before filtering (d = 0 only)
    double sse = 0.0;
    double sigma2 = 0.0;    ///< sse / n, n = length of the differenced series
    double aic = 0.0;       ///< n ln(sigma2) + 2 (p + q + 1)
    double aicc = 0.0;      ///< aic + 2k(k+1)/(n-k-1), k = p + q + 1
    PartialMonthlySeries residuals; ///< innovations that enter the sum of squares
    CalendarMonth training_start;
    CalendarMonth training_end;
    std::vector<double> level_tail;      ///< last d observations, original scale
    std::vector<double> diffed_tail;     ///< last p mean-adjusted differenced values
    std::vector<double> innovation_tail; ///< last q innovations

    std::size_t differenced_length() const noexcept;
    double criterion(InformationCriterion ic) const noexcept { return ic == InformationCriterion::Aic ? aic : aicc; }
};

/// Applies the first-difference operator d times. The result starts d months later.
MonthlySeries difference(const MonthlySeries& series, int d);

/// Undoes d rounds of differencing given the last d undifferenced values.
std::vector<double> integrate_forecasts(std::span<const double> diff_forecasts, std::span<const double> tail, int d);

/// ARMA innovations e_t = (w_t - mean) - sum phi_i (w_{t-i} - mean) - sum theta_j e_{t-j},
/// with pre-sample terms zero.
std::vector<double> css_innovations(std::span<const double> w, std::span<const double> ar,
                                    std::span<const double> ma, double mean = 0.0);

/// Sum of squared innovations over t > max(p, q).
double css_objective(std::span<const double> w, std::span<const double> ar, std::span<const double> ma,
                     double mean = 0.0);
double css_objective(const MonthlySeries& diffed, std::span<const double> ar, std::span<const double> ma,
                     double mean = 0.0);

/// Conditional-sum-of-squares fit. The differenced series is centred on its mean only
/// when d = 0. `warm_starts` (length p + q, AR first) are tried in addition to the
/// default grid.
ArimaModel fit_arima(const MonthlySeries& series, const ArimaOrder& order,
                     std::span<const std::vector<double>> warm_starts = {});

/// Exhaustive search over p <= 5, d <= 2, q <= 5. Ties go to smaller p+q, then d, then p.
ArimaOrder auto_order(const MonthlySeries& series, InformationCriterion ic = InformationCriterion::Aicc);

/// auto_order followed by the winning fit.
ArimaModel auto_arima(const MonthlySeries& series, InformationCriterion ic = InformationCriterion::Aicc);

/// Forecasts with future innovations set to zero, mapped back to the original scale.
MonthlySeries arima_forecast(const ArimaModel& model, int horizon);

} // namespace sectorcast
