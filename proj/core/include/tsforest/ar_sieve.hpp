#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsforest/rng.hpp"
#include "tsforest/series.hpp"

namespace tsforest {

/// Solution of the Yule-Walker system at every order up to p.
struct LevinsonResult {
  std::vector<double> coeffs;           // phi_1..phi_p at the final order
  double innovation_variance = 0.0;     // sigma^2_p
  std::vector<double> pacf;             // reflection coefficients kappa_1..kappa_p
  std::vector<double> order_variances;  // sigma^2_0..sigma^2_p (non-increasing)
};

/// Levinson-Durbin recursion over autocovariances gamma_0..gamma_p.
///
/// O(p^2) arithmetic instead of the O(p^3) dense solve. Requires gamma_0 > 0
/// and a positive semi-definite sequence (which sample_acvf's 1/T divisor
/// guarantees); throws std::invalid_argument otherwise. Every reflection
/// coefficient satisfies |kappa_j| < 1, which is exactly the condition for
/// the fitted AR polynomial to be stationary.
LevinsonResult levinson_durbin(std::span<const double> acvf);

/// Largest candidate order tried by the automatic selection:
/// floor(min(10*log10(T), T/4)).
std::size_t default_max_order(std::size_t T);

/// AIC order selection: argmin over p in {0..p_max} of
/// T*ln(sigma^2_p) + 2p, with the per-order innovation variances taken from
/// a single Levinson-Durbin sweep up to p_max. Ties break toward smaller p.
/// A constant series selects 0. Requires p_max < T/2.
std::size_t select_order_aic(const TimeSeries& s, std::size_t p_max);

/// A fitted autoregressive model plus everything the sieve bootstrap needs.
struct ArFit {
  std::size_t order = 0;                   // p
  double mean = 0.0;                       // mu-hat
  std::vector<double> coeffs;              // phi-hat_1..phi-hat_p
  double innovation_variance = 0.0;        // sigma^2-hat (0 for a constant series)
  std::vector<double> residuals;           // eps-hat_{p+1}..eps-hat_T
  std::vector<double> centered_residuals;  // residuals recentred to mean 0
  double aic = 0.0;
  std::vector<double> pacf;                // kappa_1..kappa_p, all in (-1, 1)
};

/// Yule-Walker fit at a fixed order. The mean is always estimated from the
/// data and subtracted; residuals are computed for t = p+1..T as
///   eps_t = (Y_t - mu) - sum_j phi_j (Y_{t-j} - mu)
/// and recentred around zero. Requires T > 2*order.
ArFit fit_ar(const TimeSeries& s, std::size_t order);

/// Fit with the order chosen by AIC. max_order < 0 uses default_max_order(T).
ArFit fit_ar_auto(const TimeSeries& s, long max_order = -1);

/// AR-sieve bootstrap draw: resample the centred residuals with replacement
/// and regenerate a series through the fitted recursion
///   Y*_t = mu + sum_j phi_j (Y*_{t-j} - mu) + eps*_t.
/// The first p lags start at mu and a 100-step warm-up is discarded, so the
/// output of length T_out does not depend on the initial condition in any
/// appreciable way. Costs O(T_out * p) time, the fit is shared read-only.
TimeSeries arsb_resample(const ArFit& fit, std::size_t T_out, RngStream& rng);

/// Recursive plug-in forecast: each step applies the fitted recursion to the
/// most recent p values, actual where available, forecasts afterwards.
std::vector<double> yw_forecast(const ArFit& fit, const TimeSeries& history,
                                std::size_t h);

/// Plain-text key/value block (order, mean, phi_i, variance, aic).
std::string to_text(const ArFit& fit);

}  // namespace tsforest
