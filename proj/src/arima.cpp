#include "sectorcast/arima.hpp"

#include "sectorcast/errors.hpp"
#include "sectorcast/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace sectorcast {
namespace {

constexpr std::size_t kMinDegreesOfFreedom = 10;

void check_order(const ArimaOrder& o) {
    if (o.p < 0 || o.p > kMaxArOrder || o.d < 0 || o.d > kMaxDifferencing || o.q < 0 || o.q > kMaxMaOrder) {
        throw ArgumentError("ARIMA order " + o.to_string() + " outside the supported box");
    }
}

bool feasible(std::size_t length, const ArimaOrder& o) {
    const auto d = static_cast<std::size_t>(o.d);
    return length > d && length - d >= kMinDegreesOfFreedom + static_cast<std::size_t>(o.p + o.q);
}

// Grid density for the coefficient box; larger models lean on warm starts from nested fits.
int grid_points_for(int k) { return k <= 2 ? 3 : 1; }

} // namespace

std::string ArimaOrder::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(q) + ")";
}

std::size_t ArimaModel::differenced_length() const noexcept {
    return static_cast<std::size_t>(training_start.months_until(training_end)) + 1 -
           static_cast<std::size_t>(order.d);
}

MonthlySeries difference(const MonthlySeries& series, int d) {
    if (d < 0) {
        throw ArgumentError("differencing order must be non-negative");
    }
    if (series.size() <= static_cast<std::size_t>(d)) {
        throw InsufficientDataError("cannot difference " + std::to_string(series.size()) + " values " +
                                    std::to_string(d) + " times");
    }
    std::vector<double> w = series.values();
    for (int r = 0; r < d; ++r) {
        for (std::size_t t = 0; t + 1 < w.size(); ++t) w[t] = w[t + 1] - w[t];
        w.pop_back();
    }
    return MonthlySeries(series.start().plus(d), std::move(w));
}

std::vector<double> integrate_forecasts(std::span<const double> diff_forecasts, std::span<const double> tail,
                                        int d) {
    if (d < 0 || tail.size() != static_cast<std::size_t>(d)) {
        throw ArgumentError("integration needs exactly d = " + std::to_string(d) + " tail values, got " +
                            std::to_string(tail.size()));
    }
    // last[r] = final value of the r-th difference of the tail
    std::vector<double> last(static_cast<std::size_t>(d));
    std::vector<double> work(tail.begin(), tail.end());
    for (int r = 0; r < d; ++r) {
        last[static_cast<std::size_t>(r)] = work.back();
        for (std::size_t t = 0; t + 1 < work.size(); ++t) work[t] = work[t + 1] - work[t];
        work.pop_back();
    }
    std::vector<double> out(diff_forecasts.begin(), diff_forecasts.end());
    for (int r = d - 1; r >= 0; --r) {
        double acc = last[static_cast<std::size_t>(r)];
        for (auto& v : out) {
            acc += v;
            v = acc;
        }
    }
    return out;
}

std::vector<double> css_innovations(std::span<const double> w, std::span<const double> ar,
                                    std::span<const double> ma, double mean) {
    std::vector<double> e(w.size(), 0.0);
    for (std::size_t t = 0; t < w.size(); ++t) {
        double v = w[t] - mean;
        for (std::size_t i = 0; i < ar.size() && i < t; ++i) v -= ar[i] * (w[t - i - 1] - mean);
        for (std::size_t j = 0; j < ma.size() && j < t; ++j) v -= ma[j] * e[t - j - 1];
        e[t] = v;
    }
    return e;
}

double css_objective(std::span<const double> w, std::span<const double> ar, std::span<const double> ma,
                     double mean) {
    const auto e = css_innovations(w, ar, ma, mean);
    const std::size_t skip = std::max(ar.size(), ma.size());
    double sse = 0.0;
    for (std::size_t t = skip; t < e.size(); ++t) sse += e[t] * e[t];
    return sse;
}

double css_objective(const MonthlySeries& diffed, std::span<const double> ar, std::span<const double> ma,
                     double mean) {
    return css_objective(diffed.values(), ar, ma, mean);
}

ArimaModel fit_arima(const MonthlySeries& series, const ArimaOrder& order,
                     std::span<const std::vector<double>> warm_starts) {
    check_order(order);
    if (!feasible(series.size(), order)) {
        throw InsufficientDataError("ARIMA" + order.to_string() + " needs a differenced length of at least " +
                                    std::to_string(kMinDegreesOfFreedom + static_cast<std::size_t>(order.p + order.q)));
    }
    const auto p = static_cast<std::size_t>(order.p);
    const auto q = static_cast<std::size_t>(order.q);
    const std::size_t k = p + q;

    const auto diffed = difference(series, order.d);
    const auto& w = diffed.values();
    const double mean = order.d == 0 ? std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size()) : 0.0;

    std::vector<double> coef(k, 0.0);
    if (k > 0) {
        BoundedProblem problem{
            std::vector<double>(k, -kCoefficientBound),
            std::vector<double>(k, kCoefficientBound),
            [&](std::span<const double> x) { return css_objective(w, x.first(p), x.subspan(p), mean); },
        };
        std::vector<std::vector<double>> starts;
        for (const auto& s : warm_starts) {
            if (s.size() != k) {
                throw ArgumentError("warm start has " + std::to_string(s.size()) + " coefficients, expected " +
                                    std::to_string(k));
            }
            std::vector<double> clamped(s);
            for (auto& v : clamped) v = std::clamp(v, -kCoefficientBound, kCoefficientBound);
            starts.push_back(std::move(clamped));
        }
        coef = multistart_minimize(problem, grid_points_for(static_cast<int>(k)), 1e-12, 4000 * k, starts).argmin;
    }

    std::vector<double> ar(coef.begin(), coef.begin() + static_cast<long>(p));
    std::vector<double> ma(coef.begin() + static_cast<long>(p), coef.end());
    const auto e = css_innovations(w, ar, ma, mean);
    const std::size_t skip = std::max(p, q);
    std::vector<std::optional<double>> resid(series.size());
    double sse = 0.0;
    for (std::size_t t = skip; t < e.size(); ++t) {
        sse += e[t] * e[t];
        resid[t + static_cast<std::size_t>(order.d)] = e[t];
    }
    const auto n = static_cast<double>(w.size());
    const auto params = static_cast<double>(k + 1);
    const double sigma2 = sse / n;
    const double aic = sse > 0.0 ? n * std::log(sigma2) + 2.0 * params : -std::numeric_limits<double>::infinity();

    std::vector<double> diffed_tail;
    for (std::size_t i = w.size() - p; i < w.size(); ++i) diffed_tail.push_back(w[i] - mean);

    return ArimaModel{
        order,
        std::move(ar),
        std::move(ma),
        mean,
        sse,
        sigma2,
        aic,
        aic + 2.0 * params * (params + 1.0) / (n - params - 1.0),
        PartialMonthlySeries(series.start(), std::move(resid)),
        series.start(),
        series.end(),
        std::vector<double>(series.values().end() - order.d, series.values().end()),
        std::move(diffed_tail),
        std::vector<double>(e.end() - static_cast<long>(q), e.end()),
    };
}

namespace {

using FitCache = std::map<std::pair<int, int>, ArimaModel>;

// Fits every feasible (p, q) for one d, warm-starting each from its nested neighbours.
FitCache fit_all_for_d(const MonthlySeries& series, int d) {
    FitCache fits;
    for (int p = 0; p <= kMaxArOrder; ++p) {
        for (int q = 0; q <= kMaxMaOrder; ++q) {
            const ArimaOrder order{p, d, q};
            if (!feasible(series.size(), order)) continue;
            std::vector<std::vector<double>> starts;
            if (auto it = fits.find({p - 1, q}); it != fits.end()) {
                std::vector<double> s = it->second.ar;
                s.push_back(0.0);
                s.insert(s.end(), it->second.ma.begin(), it->second.ma.end());
                starts.push_back(std::move(s));
            }
            if (auto it = fits.find({p, q - 1}); it != fits.end()) {
                std::vector<double> s = it->second.ar;
                s.insert(s.end(), it->second.ma.begin(), it->second.ma.end());
                s.push_back(0.0);
                starts.push_back(std::move(s));
            }
            fits.emplace(std::pair{p, q}, fit_arima(series, order, starts));
        }
    }
    return fits;
}

bool better(const ArimaModel& a, const ArimaModel& b, InformationCriterion ic) {
    const double ca = a.criterion(ic);
    const double cb = b.criterion(ic);
    if (ca != cb) return ca < cb;
    const auto key = [](const ArimaOrder& o) { return std::array{o.p + o.q, o.d, o.p}; };
    return key(a.order) < key(b.order);
}

} // namespace

ArimaModel auto_arima(const MonthlySeries& series, InformationCriterion ic) {
    if (series.size() < 30) {
        throw InsufficientDataError("automatic order selection needs 30 months, got " +
                                    std::to_string(series.size()));
    }
    std::vector<std::future<FitCache>> jobs;
    for (int d = 0; d <= kMaxDifferencing; ++d) {
        jobs.push_back(std::async(std::launch::async, fit_all_for_d, std::cref(series), d));
    }
    std::optional<ArimaModel> best;
    for (auto& job : jobs) {
        for (auto& [_, model] : job.get()) {
            if (!best || better(model, *best, ic)) best = std::move(model);
        }
    }
    if (!best) {
        throw InsufficientDataError("no feasible ARIMA order");
    }
    return *best;
}

ArimaOrder auto_order(const MonthlySeries& series, InformationCriterion ic) { return auto_arima(series, ic).order; }

MonthlySeries arima_forecast(const ArimaModel& model, int horizon) {
    if (horizon < 1) {
        throw ArgumentError("forecast horizon must be at least 1");
    }
    const auto p = model.ar.size();
    const auto q = model.ma.size();
    // histories, most recent last; future innovations are zero
    std::vector<double> w(model.diffed_tail);
    std::vector<double> e(model.innovation_tail);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(horizon));
    for (int h = 0; h < horizon; ++h) {
        double v = 0.0;
        for (std::size_t i = 0; i < p; ++i) v += model.ar[i] * w[w.size() - 1 - i];
        for (std::size_t j = 0; j < q; ++j) v += model.ma[j] * e[e.size() - 1 - j];
        w.push_back(v);
        e.push_back(0.0);
        out.push_back(v + model.mean);
    }
    return MonthlySeries(model.training_end.next(),
                         integrate_forecasts(out, model.level_tail, model.order.d));
}

} // namespace sectorcast
