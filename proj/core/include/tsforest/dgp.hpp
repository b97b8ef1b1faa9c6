#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsforest/rng.hpp"
#include "tsforest/series.hpp"

namespace tsforest {

enum class DgpFamily { AR, MA, ARMA, ARIMA, ARFIMA, GARCH };

std::string family_name(DgpFamily family);
DgpFamily parse_family(const std::string& name);

/// Parameterisation of one data-generating process.
///
/// MA sign convention: the innovations enter as
///   Y_t = sum_i phi_i Y_{t-i} + eps_t - sum_j theta_j eps_{t-j},
/// i.e. the theta terms are SUBTRACTED. Most textbooks add them; flip the
/// sign of the theta coefficients to translate.
struct DgpSpec {
  DgpFamily family = DgpFamily::AR;
  std::vector<double> ar_coeffs;   // phi_1..phi_p
  std::vector<double> ma_coeffs;   // theta_1..theta_q
  double d = 0.0;                  // 1 for ARIMA, fractional (0,0.5) for ARFIMA
  double garch_alpha0 = 0.0;       // alpha_0 > 0
  std::vector<double> garch_alpha; // alpha_1..alpha_p (weights on lagged Y^2)
  std::vector<double> garch_beta;  // beta_1..beta_q (weights on lagged sigma^2)
  std::size_t burn_in = 500;       // discarded initial observations

  // Named constructors; each validates the family's invariants and throws
  // std::invalid_argument on violation.
  static DgpSpec ar(std::vector<double> phi);
  static DgpSpec ma(std::vector<double> theta);
  static DgpSpec arma(std::vector<double> phi, std::vector<double> theta);
  static DgpSpec arima(std::vector<double> phi, std::vector<double> theta);
  static DgpSpec arfima(std::vector<double> phi, std::vector<double> theta,
                        double d);
  static DgpSpec garch(double alpha0, std::vector<double> alpha,
                       std::vector<double> beta);

  /// Throws std::invalid_argument if any family invariant is violated
  /// (nonstationary AR part, d out of range, explosive GARCH, ...).
  void validate() const;

  /// Compact label such as "phi1=0.7;theta1=0.1;d=0.3" (csv-safe, ';'-joined).
  std::string param_label() const;
};

/// Simulate an AR/MA/ARMA process driven by N(0,1) noise. The recursion is
/// warmed up for spec.burn_in steps which are discarded; the returned series
/// has exactly length T.
TimeSeries gen_arma(const DgpSpec& spec, std::size_t T, RngStream& rng);

/// MA(inf) weights psi_0..psi_n of the inverse fractional difference
/// (1-B)^{-d}: psi_0 = 1, psi_k = psi_{k-1} * (k-1+d) / k.
/// Requires 0 < d < 0.5.
std::vector<double> frac_diff_weights(double d, std::size_t n);

/// Simulate an ARFIMA process: an ARMA path is passed through the truncated
/// inverse fractional filter (truncation = burn_in + T terms). d = 0 is the
/// degenerate identity path and reproduces gen_arma bitwise.
TimeSeries gen_arfima(const DgpSpec& spec, std::size_t T, RngStream& rng);

/// Simulate an ARIMA(p,1,q) process as the cumulative sum of an ARMA path of
/// length T. Only d = 1 is supported.
TimeSeries gen_arima(const DgpSpec& spec, std::size_t T, RngStream& rng);

/// Simulate a GARCH process: Y_t = sigma_t eps_t with
/// sigma_t^2 = alpha_0 + sum_i alpha_i Y_{t-i}^2 + sum_j beta_j sigma_{t-j}^2,
/// initialised at the unconditional variance alpha_0 / (1 - sum alpha - sum beta).
TimeSeries gen_garch(const DgpSpec& spec, std::size_t T, RngStream& rng);

/// Dispatch on spec.family.
TimeSeries generate(const DgpSpec& spec, std::size_t T, RngStream& rng);

}  // namespace tsforest
