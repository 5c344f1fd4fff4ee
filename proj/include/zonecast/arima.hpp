#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zonecast/timeseries.hpp"

namespace zonecast::forecast {

struct ArimaOrder {
    int p = 0;
    int d = 0;
    int q = 0;

    bool operator==(const ArimaOrder&) const = default;
    std::string to_string() const {
        return "(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(q) + ")";
    }
};

/// d-fold first differences; output length is input length - d.
/// SeriesTooShort when the input has no more than d values.
std::vector<double> difference(std::span<const double> values, int d);

/// Undoes d-fold differencing for values that continue `history`:
/// integrate(difference(S, d) tail, S prefix, d) reproduces the tail of S
/// exactly. `history` must hold at least d values.
std::vector<double> integrate(const std::vector<double>& diffed_future,
                              std::span<const double> history, int d);

/// ARIMA(p,d,q) with a constant, fitted by conditional Gaussian maximum
/// likelihood on the differenced series. Stationarity and invertibility are
/// guaranteed by optimizing partial-autocorrelation transforms of the AR and
/// MA coefficients. The exogenous extension regresses the differenced series
/// on K external signals inside the same recursion, so a fit with K = 0 is
/// the plain ARIMA fit.
struct ArimaModel {
    ArimaOrder order;
    double constant = 0.0;
    std::vector<double> ar_coeffs;
    std::vector<double> ma_coeffs;
    std::vector<double> exog_coeffs;  // γ, one per external signal
    double noise_variance = 1.0;
    double log_likelihood = 0.0;
    double aic = 0.0;
    std::vector<double> residuals;  // on the differenced scale
    bool fitted = false;

    /// Exogenous matrix the model was fit against (values aligned to the
    /// original series index), kept for forecast-time recursion.
    std::vector<std::vector<double>> exog_hist;
};

using ArimaxModel = ArimaModel;

/// Aligned external signals: exog[k][i] pairs with series value i, with
/// `future` rows extending past the end of the series for forecasting.
struct ExogForFit {
    std::vector<std::vector<double>> values;  // K x T
};

ArimaModel arima_fit(const TimeSeries& series, const ArimaOrder& order);
ArimaxModel arimax_fit(const TimeSeries& series, const ExogForFit& exog, const ArimaOrder& order);

/// Multi-step recursion: future shocks are zero, future values are replaced
/// by their forecasts, then the d differences are undone against the tail
/// of `series`.
std::vector<double> arima_forecast(const ArimaModel& model, const TimeSeries& series,
                                   int horizon);

/// exog_future[k] must supply at least `horizon` values per signal
/// (ExogCoverage otherwise).
std::vector<double> arimax_forecast(const ArimaxModel& model, const TimeSeries& series,
                                    const std::vector<std::vector<double>>& exog_future,
                                    int horizon);

struct GridBounds {
    int max_p = 7;
    int max_d = 2;
    int max_q = 7;
};

struct GridCell {
    ArimaOrder order;
    std::optional<double> aic;  // absent when the fit failed
    std::string error;
};

struct GridSearchResult {
    ArimaxModel best;
    std::vector<GridCell> cells;
};

/// Exhaustive (p,d,q) scan minimizing AIC. Failed fits are recorded and
/// skipped; ties break toward smaller p+q, then smaller d. Cells are fitted
/// in parallel when `parallel` is set — results are keyed by order, so
/// parallel and serial scans are bit-identical. AllFitsFailed when nothing
/// fits.
GridSearchResult grid_search(const TimeSeries& series, const std::optional<ExogForFit>& exog,
                             const GridBounds& bounds, bool parallel = false);

}  // namespace zonecast::forecast
