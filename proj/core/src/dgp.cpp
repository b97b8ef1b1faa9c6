#include "tsforest/dgp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tsforest/series_io.hpp"
#include "tsforest/stationarity.hpp"

namespace tsforest {

std::string family_name(DgpFamily family) {
  switch (family) {
    case DgpFamily::AR:
      return "AR";
    case DgpFamily::MA:
      return "MA";
    case DgpFamily::ARMA:
      return "ARMA";
    case DgpFamily::ARIMA:
      return "ARIMA";
    case DgpFamily::ARFIMA:
      return "ARFIMA";
    case DgpFamily::GARCH:
      return "GARCH";
  }
  throw std::logic_error("family_name: unknown family");
}

DgpFamily parse_family(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "ar") return DgpFamily::AR;
  if (lower == "ma") return DgpFamily::MA;
  if (lower == "arma") return DgpFamily::ARMA;
  if (lower == "arima") return DgpFamily::ARIMA;
  if (lower == "arfima") return DgpFamily::ARFIMA;
  if (lower == "garch") return DgpFamily::GARCH;
  throw std::invalid_argument("unknown DGP family: " + name);
}

DgpSpec DgpSpec::ar(std::vector<double> phi) {
  DgpSpec spec;
  spec.family = DgpFamily::AR;
  spec.ar_coeffs = std::move(phi);
  spec.validate();
  return spec;
}

DgpSpec DgpSpec::ma(std::vector<double> theta) {
  DgpSpec spec;
  spec.family = DgpFamily::MA;
  spec.ma_coeffs = std::move(theta);
  spec.validate();
  return spec;
}

DgpSpec DgpSpec::arma(std::vector<double> phi, std::vector<double> theta) {
  DgpSpec spec;
  spec.family = DgpFamily::ARMA;
  spec.ar_coeffs = std::move(phi);
  spec.ma_coeffs = std::move(theta);
  spec.validate();
  return spec;
}

DgpSpec DgpSpec::arima(std::vector<double> phi, std::vector<double> theta) {
  DgpSpec spec;
  spec.family = DgpFamily::ARIMA;
  spec.ar_coeffs = std::move(phi);
  spec.ma_coeffs = std::move(theta);
  spec.d = 1.0;
  spec.validate();
  return spec;
}

DgpSpec DgpSpec::arfima(std::vector<double> phi, std::vector<double> theta,
                        double d) {
  DgpSpec spec;
  spec.family = DgpFamily::ARFIMA;
  spec.ar_coeffs = std::move(phi);
  spec.ma_coeffs = std::move(theta);
  spec.d = d;
  spec.validate();
  return spec;
}

DgpSpec DgpSpec::garch(double alpha0, std::vector<double> alpha,
                       std::vector<double> beta) {
  DgpSpec spec;
  spec.family = DgpFamily::GARCH;
  spec.garch_alpha0 = alpha0;
  spec.garch_alpha = std::move(alpha);
  spec.garch_beta = std::move(beta);
  spec.validate();
  return spec;
}

void DgpSpec::validate() const {
  if (family != DgpFamily::GARCH && !ar_coeffs.empty() &&
      !ar_is_stationary(ar_coeffs)) {
    throw std::invalid_argument(
        "DgpSpec: AR part is nonstationary (companion eigenvalue >= 1)");
  }
  switch (family) {
    case DgpFamily::AR:
    case DgpFamily::MA:
    case DgpFamily::ARMA:
      break;
    case DgpFamily::ARIMA:
      if (d != 1.0) {
        throw std::invalid_argument("DgpSpec: ARIMA supports d = 1 only");
      }
      break;
    case DgpFamily::ARFIMA:
      if (!(d > 0.0 && d < 0.5)) {
        throw std::invalid_argument("DgpSpec: ARFIMA requires 0 < d < 0.5");
      }
      break;
    case DgpFamily::GARCH: {
      if (!(garch_alpha0 > 0.0)) {
        throw std::invalid_argument("DgpSpec: GARCH requires alpha0 > 0");
      }
      double persistence = 0.0;
      for (const double a : garch_alpha) {
        if (a < 0.0) {
          throw std::invalid_argument("DgpSpec: GARCH alpha must be >= 0");
        }
        persistence += a;
      }
      for (const double b : garch_beta) {
        if (b < 0.0) {
          throw std::invalid_argument("DgpSpec: GARCH beta must be >= 0");
        }
        persistence += b;
      }
      if (persistence >= 1.0) {
        throw std::invalid_argument(
            "DgpSpec: GARCH requires sum(alpha) + sum(beta) < 1");
      }
      break;
    }
  }
}

std::string DgpSpec::param_label() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& key, double value) {
    if (!first) out << ';';
    out << key << '=' << format_double(value);
    first = false;
  };
  if (family == DgpFamily::GARCH) {
    emit("alpha0", garch_alpha0);
    for (std::size_t i = 0; i < garch_alpha.size(); ++i) {
      emit("alpha" + std::to_string(i + 1), garch_alpha[i]);
    }
    for (std::size_t j = 0; j < garch_beta.size(); ++j) {
      emit("beta" + std::to_string(j + 1), garch_beta[j]);
    }
    return out.str();
  }
  for (std::size_t i = 0; i < ar_coeffs.size(); ++i) {
    emit("phi" + std::to_string(i + 1), ar_coeffs[i]);
  }
  for (std::size_t j = 0; j < ma_coeffs.size(); ++j) {
    emit("theta" + std::to_string(j + 1), ma_coeffs[j]);
  }
  if (family == DgpFamily::ARIMA || family == DgpFamily::ARFIMA) {
    emit("d", d);
  }
  if (first) {
    out << "none";
  }
  return out.str();
}

namespace {

// Full ARMA path of length `total` including the warm-up prefix; the caller
// decides how much to discard. Pre-sample Y and eps are zero.
std::vector<double> arma_path(const DgpSpec& spec, std::size_t total,
                              RngStream& rng) {
  if (!spec.ar_coeffs.empty() && !ar_is_stationary(spec.ar_coeffs)) {
    throw std::invalid_argument("gen_arma: AR part is nonstationary");
  }
  const std::size_t p = spec.ar_coeffs.size();
  const std::size_t q = spec.ma_coeffs.size();
  std::vector<double> y(total, 0.0);
  std::vector<double> eps(total, 0.0);
  for (std::size_t t = 0; t < total; ++t) {
    eps[t] = rng.normal();
    double value = eps[t];
    for (std::size_t i = 0; i < p && i < t; ++i) {
      value += spec.ar_coeffs[i] * y[t - 1 - i];
    }
    for (std::size_t j = 0; j < q && j < t; ++j) {
      value -= spec.ma_coeffs[j] * eps[t - 1 - j];
    }
    y[t] = value;
  }
  return y;
}

std::vector<double> tail(std::vector<double> path, std::size_t T) {
  std::vector<double> out(path.end() - static_cast<std::ptrdiff_t>(T),
                          path.end());
  return out;
}

}  // namespace

TimeSeries gen_arma(const DgpSpec& spec, std::size_t T, RngStream& rng) {
  if (T == 0) {
    throw std::invalid_argument("gen_arma: T must be >= 1");
  }
  return TimeSeries(tail(arma_path(spec, spec.burn_in + T, rng), T));
}

std::vector<double> frac_diff_weights(double d, std::size_t n) {
  if (!(d > 0.0 && d < 0.5)) {
    throw std::invalid_argument("frac_diff_weights: d must be in (0, 0.5)");
  }
  std::vector<double> weights(n + 1);
  weights[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    weights[k] =
        weights[k - 1] * (static_cast<double>(k) - 1.0 + d) / static_cast<double>(k);
  }
  return weights;
}

TimeSeries gen_arfima(const DgpSpec& spec, std::size_t T, RngStream& rng) {
  if (T == 0) {
    throw std::invalid_argument("gen_arfima: T must be >= 1");
  }
  if (!(spec.d >= 0.0 && spec.d < 0.5)) {
    throw std::invalid_argument("gen_arfima: d must be in [0, 0.5)");
  }
  const std::size_t total = spec.burn_in + T;
  const std::vector<double> x = arma_path(spec, total, rng);
  // d = 0 degenerates to the identity filter (psi_0 = 1, rest 0).
  std::vector<double> psi;
  if (spec.d == 0.0) {
    psi.assign(1, 1.0);
  } else {
    psi = frac_diff_weights(spec.d, total - 1);
  }
  std::vector<double> y(total, 0.0);
  for (std::size_t t = 0; t < total; ++t) {
    double acc = 0.0;
    const std::size_t kmax = std::min(t + 1, psi.size());
    for (std::size_t k = 0; k < kmax; ++k) {
      acc += psi[k] * x[t - k];
    }
    y[t] = acc;
  }
  return TimeSeries(tail(std::move(y), T));
}

TimeSeries gen_arima(const DgpSpec& spec, std::size_t T, RngStream& rng) {
  if (spec.d != 1.0) {
    throw std::invalid_argument("gen_arima: only d = 1 is supported");
  }
  const TimeSeries increments = gen_arma(spec, T, rng);
  std::vector<double> y(T);
  double acc = 0.0;
  for (std::size_t t = 0; t < T; ++t) {
    acc += increments[t];
    y[t] = acc;
  }
  return TimeSeries(std::move(y));
}

TimeSeries gen_garch(const DgpSpec& spec, std::size_t T, RngStream& rng) {
  if (T == 0) {
    throw std::invalid_argument("gen_garch: T must be >= 1");
  }
  spec.validate();
  const std::size_t p = spec.garch_alpha.size();
  const std::size_t q = spec.garch_beta.size();
  double persistence = 0.0;
  for (const double a : spec.garch_alpha) persistence += a;
  for (const double b : spec.garch_beta) persistence += b;
  const double uncond_var = spec.garch_alpha0 / (1.0 - persistence);

  // Pre-sample sigma^2 and Y^2 both start at the unconditional variance, so
  // the recursion begins in its stationary regime.
  const std::size_t total = spec.burn_in + T;
  std::vector<double> y2(total, 0.0);
  std::vector<double> sigma2(total, 0.0);
  std::vector<double> y(total, 0.0);
  for (std::size_t t = 0; t < total; ++t) {
    double s2 = spec.garch_alpha0;
    for (std::size_t i = 0; i < p; ++i) {
      const double lag_y2 = (t > i) ? y2[t - 1 - i] : uncond_var;
      s2 += spec.garch_alpha[i] * lag_y2;
    }
    for (std::size_t j = 0; j < q; ++j) {
      const double lag_s2 = (t > j) ? sigma2[t - 1 - j] : uncond_var;
      s2 += spec.garch_beta[j] * lag_s2;
    }
    sigma2[t] = s2;
    y[t] = std::sqrt(s2) * rng.normal();
    y2[t] = y[t] * y[t];
  }
  return TimeSeries(tail(std::move(y), T));
}

TimeSeries generate(const DgpSpec& spec, std::size_t T, RngStream& rng) {
  switch (spec.family) {
    case DgpFamily::AR:
    case DgpFamily::MA:
    case DgpFamily::ARMA:
      return gen_arma(spec, T, rng);
    case DgpFamily::ARIMA:
      return gen_arima(spec, T, rng);
    case DgpFamily::ARFIMA:
      return gen_arfima(spec, T, rng);
    case DgpFamily::GARCH:
      return gen_garch(spec, T, rng);
  }
  throw std::logic_error("generate: unknown family");
}

}  // namespace tsforest
