#include "tsforest/ar_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tsforest/series_io.hpp"

namespace tsforest {

namespace {

constexpr std::size_t kArsbBurnIn = 100;

// One Levinson-Durbin sweep. Stops early (without throwing) if the input
// turns out numerically singular; `completed` reports how many orders were
// solved. The strict variant below turns early stops into errors.
struct SweepResult {
  std::vector<double> coeffs;
  std::vector<double> pacf;
  std::vector<double> order_variances;
  std::size_t completed = 0;
};

SweepResult levinson_sweep(std::span<const double> acvf) {
  if (acvf.empty()) {
    throw std::invalid_argument("levinson_durbin: need at least gamma_0");
  }
  if (!(acvf[0] > 0.0)) {
    throw std::invalid_argument(
        "levinson_durbin: gamma_0 must be positive (constant series?)");
  }
  const std::size_t p = acvf.size() - 1;
  SweepResult result;
  result.order_variances.reserve(p + 1);
  result.order_variances.push_back(acvf[0]);
  result.coeffs.reserve(p);
  result.pacf.reserve(p);

  std::vector<double> prev;
  for (std::size_t m = 1; m <= p; ++m) {
    const double var = result.order_variances.back();
    if (!(var > 0.0)) {
      break;
    }
    double num = acvf[m];
    for (std::size_t j = 1; j < m; ++j) {
      num -= prev[j - 1] * acvf[m - j];
    }
    const double kappa = num / var;
    if (!(std::abs(kappa) < 1.0)) {
      break;
    }
    std::vector<double> current(m);
    current[m - 1] = kappa;
    for (std::size_t j = 1; j < m; ++j) {
      current[j - 1] = prev[j - 1] - kappa * prev[m - 1 - j];
    }
    result.pacf.push_back(kappa);
    result.order_variances.push_back(var * (1.0 - kappa * kappa));
    prev = std::move(current);
    result.completed = m;
  }
  result.coeffs = std::move(prev);
  return result;
}

double aic_value(std::size_t T, double variance, std::size_t order) {
  const double floor_var = std::numeric_limits<double>::min();
  return static_cast<double>(T) * std::log(std::max(variance, floor_var)) +
         2.0 * static_cast<double>(order);
}

}  // namespace

LevinsonResult levinson_durbin(std::span<const double> acvf) {
  SweepResult sweep = levinson_sweep(acvf);
  if (sweep.completed + 1 != acvf.size()) {
    throw std::invalid_argument(
        "levinson_durbin: autocovariance sequence is not positive definite");
  }
  LevinsonResult result;
  result.coeffs = std::move(sweep.coeffs);
  result.pacf = std::move(sweep.pacf);
  result.order_variances = std::move(sweep.order_variances);
  result.innovation_variance = result.order_variances.back();
  return result;
}

std::size_t default_max_order(std::size_t T) {
  const double by_log = 10.0 * std::log10(static_cast<double>(T));
  const double by_len = static_cast<double>(T) / 4.0;
  const double bound = std::min(by_log, by_len);
  return bound <= 0.0 ? 0 : static_cast<std::size_t>(bound);
}

std::size_t select_order_aic(const TimeSeries& s, std::size_t p_max) {
  const std::size_t T = s.length();
  if (2 * p_max >= T) {
    throw std::invalid_argument("select_order_aic: p_max must be < T/2");
  }
  const std::vector<double> acvf = sample_acvf(s, p_max);
  if (!(acvf[0] > 0.0)) {
    return 0;  // constant series
  }
  const SweepResult sweep = levinson_sweep(acvf);
  std::size_t best_order = 0;
  double best_aic = aic_value(T, sweep.order_variances[0], 0);
  for (std::size_t m = 1; m <= sweep.completed; ++m) {
    const double aic = aic_value(T, sweep.order_variances[m], m);
    if (aic < best_aic) {
      best_aic = aic;
      best_order = m;
    }
  }
  return best_order;
}

ArFit fit_ar(const TimeSeries& s, std::size_t order) {
  const std::size_t T = s.length();
  if (T <= 2 * order) {
    throw std::invalid_argument("fit_ar: series too short for requested order");
  }
  ArFit fit;
  fit.mean = sample_mean(s);

  const std::vector<double> acvf = sample_acvf(s, order);
  if (!(acvf[0] > 0.0)) {
    // Constant series: order-0 model with zero innovation variance.
    fit.order = 0;
    fit.innovation_variance = 0.0;
    fit.residuals.assign(T, 0.0);
    fit.centered_residuals.assign(T, 0.0);
    fit.aic = -std::numeric_limits<double>::infinity();
    return fit;
  }

  LevinsonResult lev = levinson_durbin(acvf);
  fit.order = order;
  fit.coeffs = std::move(lev.coeffs);
  fit.pacf = std::move(lev.pacf);
  fit.innovation_variance = lev.innovation_variance;
  fit.aic = aic_value(T, fit.innovation_variance, order);

  fit.residuals.reserve(T - order);
  for (std::size_t t = order; t < T; ++t) {
    double eps = s[t] - fit.mean;
    for (std::size_t j = 1; j <= order; ++j) {
      eps -= fit.coeffs[j - 1] * (s[t - j] - fit.mean);
    }
    fit.residuals.push_back(eps);
  }
  double resid_mean = 0.0;
  for (const double e : fit.residuals) {
    resid_mean += e;
  }
  resid_mean /= static_cast<double>(fit.residuals.size());
  fit.centered_residuals.reserve(fit.residuals.size());
  for (const double e : fit.residuals) {
    fit.centered_residuals.push_back(e - resid_mean);
  }
  return fit;
}

ArFit fit_ar_auto(const TimeSeries& s, long max_order) {
  const std::size_t p_max = max_order < 0
                                ? default_max_order(s.length())
                                : static_cast<std::size_t>(max_order);
  if (s.length() <= 2 * p_max) {
    throw std::invalid_argument(
        "fit_ar_auto: series too short for the candidate orders");
  }
  return fit_ar(s, select_order_aic(s, p_max));
}

TimeSeries arsb_resample(const ArFit& fit, std::size_t T_out, RngStream& rng) {
  if (T_out == 0) {
    throw std::invalid_argument("arsb_resample: T_out must be >= 1");
  }
  const std::vector<double>& pool = fit.centered_residuals;
  if (pool.empty()) {
    throw std::invalid_argument("arsb_resample: fit has no residuals");
  }
  const std::size_t p = fit.order;
  const std::size_t total = p + kArsbBurnIn + T_out;
  std::vector<double> path(total, fit.mean);
  for (std::size_t t = p; t < total; ++t) {
    double value = fit.mean + pool[rng.uniform_below(pool.size())];
    for (std::size_t j = 1; j <= p; ++j) {
      value += fit.coeffs[j - 1] * (path[t - j] - fit.mean);
    }
    path[t] = value;
  }
  return TimeSeries(std::vector<double>(
      path.end() - static_cast<std::ptrdiff_t>(T_out), path.end()));
}

std::vector<double> yw_forecast(const ArFit& fit, const TimeSeries& history,
                                std::size_t h) {
  if (h == 0) {
    throw std::invalid_argument("yw_forecast: horizon must be >= 1");
  }
  const std::size_t p = fit.order;
  if (history.length() < p) {
    throw std::invalid_argument("yw_forecast: history shorter than fit order");
  }
  // Rolling window of the last p values, actual first, forecasts appended.
  std::vector<double> window(p);
  for (std::size_t j = 0; j < p; ++j) {
    window[j] = history[history.length() - p + j];
  }
  std::vector<double> forecasts;
  forecasts.reserve(h);
  for (std::size_t k = 0; k < h; ++k) {
    double value = fit.mean;
    for (std::size_t j = 1; j <= p; ++j) {
      value += fit.coeffs[j - 1] * (window[p - j] - fit.mean);
    }
    forecasts.push_back(value);
    if (p > 0) {
      window.erase(window.begin());
      window.push_back(value);
    }
  }
  return forecasts;
}

std::string to_text(const ArFit& fit) {
  std::ostringstream out;
  out << "order " << fit.order << '\n';
  out << "mean " << format_double(fit.mean) << '\n';
  for (std::size_t j = 0; j < fit.coeffs.size(); ++j) {
    out << "phi_" << (j + 1) << ' ' << format_double(fit.coeffs[j]) << '\n';
  }
  out << "innovation_variance " << format_double(fit.innovation_variance)
      << '\n';
  out << "aic " << format_double(fit.aic) << '\n';
  return out.str();
}

}  // namespace tsforest
