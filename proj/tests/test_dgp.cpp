#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_helpers.hpp"
#include "tsforest/dgp.hpp"
#include "tsforest/series.hpp"

using namespace tsforest;

TEST_SUITE("dgp") {

TEST_CASE("spec validation rejects bad parameters") {
  CHECK_THROWS(DgpSpec::ar({1.05}));                  // unit root crossed
  CHECK_THROWS(DgpSpec::arma({0.6, 0.5}, {0.1}));     // nonstationary AR part
  CHECK_THROWS(DgpSpec::arfima({0.3}, {0.4}, 0.6));   // d out of range
  CHECK_THROWS(DgpSpec::arfima({0.3}, {0.4}, 0.0));
  CHECK_THROWS(DgpSpec::garch(0.0, {0.3}, {0.6}));    // alpha0 must be > 0
  CHECK_THROWS(DgpSpec::garch(0.01, {0.5}, {0.5}));   // persistence >= 1
  CHECK_NOTHROW(DgpSpec::ar({0.99}));
  CHECK_NOTHROW(DgpSpec::arma({0.5, -0.3}, {0.2}));
}

TEST_CASE("white-noise case has unit sample variance") {
  RngStream rng(1, 0);
  const auto spec = DgpSpec::arma({}, {});
  const TimeSeries s = gen_arma(spec, 1000, rng);
  CHECK(tsf_test::sample_variance(s) == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("AR(1) lag-1 autocorrelation matches phi") {
  RngStream rng(2, 0);
  const TimeSeries s = gen_arma(DgpSpec::ar({0.8}), 1000, rng);
  CHECK(tsf_test::lag_autocorr(s, 1) == doctest::Approx(0.8).epsilon(0.0625));
}

TEST_CASE("MA(1) lag-1 autocorrelation follows the minus-sign convention") {
  // rho_1 = -theta / (1 + theta^2) because the theta terms are subtracted.
  const double theta = 0.8;
  const double rho1 = -theta / (1.0 + theta * theta);
  RngStream rng(3, 0);
  const TimeSeries s = gen_arma(DgpSpec::ma({theta}), 2000, rng);
  CHECK(tsf_test::lag_autocorr(s, 1) == doctest::Approx(rho1).epsilon(0.1));
  CHECK(rho1 == doctest::Approx(-0.488).epsilon(0.001));
}

TEST_CASE("generators are deterministic in (spec, T, stream)") {
  const auto spec = DgpSpec::arma({0.5}, {0.2});
  RngStream a(9, 4);
  RngStream b(9, 4);
  const TimeSeries x = gen_arma(spec, 200, a);
  const TimeSeries y = gen_arma(spec, 200, b);
  for (std::size_t i = 0; i < 200; ++i) {
    CHECK(x[i] == y[i]);
  }
}

TEST_CASE("stationary families have near-zero sample mean") {
  RngStream rng(17, 0);
  const std::size_t T = 4000;
  const std::vector<DgpSpec> specs = {
      DgpSpec::ar({0.8}), DgpSpec::ma({-0.5}), DgpSpec::arma({0.7}, {0.1}),
      DgpSpec::garch(0.01, {0.05}, {0.9})};
  std::uint64_t child = 0;
  for (const auto& spec : specs) {
    RngStream stream = rng.substream(child++);
    const TimeSeries s = generate(spec, T, stream);
    const double sd = std::sqrt(tsf_test::sample_variance(s));
    CHECK(std::abs(sample_mean(s)) < 4.0 * sd / std::sqrt(static_cast<double>(T)));
  }
}

TEST_CASE("fractional difference weights: recursion start and decay") {
  const auto w = frac_diff_weights(0.3, 1000);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == doctest::Approx(0.3));
  CHECK(w[2] == doctest::Approx(0.195));
  for (std::size_t k = 2; k < w.size(); ++k) {
    CHECK(w[k] > 0.0);
    CHECK(w[k] < w[k - 1]);
  }
  CHECK_THROWS(frac_diff_weights(0.0, 10));
  CHECK_THROWS(frac_diff_weights(0.5, 10));
  CHECK_THROWS(frac_diff_weights(-0.1, 10));
}

TEST_CASE("ARFIMA with d = 0 reproduces the ARMA path bitwise") {
  DgpSpec spec;
  spec.family = DgpFamily::ARFIMA;
  spec.ar_coeffs = {0.5};
  spec.ma_coeffs = {0.2};
  spec.d = 0.0;  // degenerate identity filter
  RngStream a(5, 1);
  RngStream b(5, 1);
  const TimeSeries arfima = gen_arfima(spec, 300, a);
  const TimeSeries arma = gen_arma(spec, 300, b);
  for (std::size_t i = 0; i < 300; ++i) {
    CHECK(arfima[i] == arma[i]);
  }
}

TEST_CASE("ARFIMA long memory: slower ACF decay than the matched ARMA") {
  RngStream a(6, 1);
  RngStream b(6, 2);
  const TimeSeries long_memory =
      gen_arfima(DgpSpec::arfima({0.7}, {0.2}, 0.3), 5000, a);
  const TimeSeries short_memory =
      gen_arma(DgpSpec::arma({0.7}, {0.2}), 5000, b);
  CHECK(tsf_test::lag_autocorr(long_memory, 20) >
        tsf_test::lag_autocorr(short_memory, 20));
}

TEST_CASE("pure fractional noise variance matches the gamma-function formula") {
  // Var of ARFIMA(0, d, 0) with unit innovations: Gamma(1-2d) / Gamma(1-d)^2.
  const double d = 0.3;
  const double theoretical =
      std::tgamma(1.0 - 2.0 * d) / std::pow(std::tgamma(1.0 - d), 2);
  CHECK(theoretical == doctest::Approx(1.3164).epsilon(0.001));

  DgpSpec spec;
  spec.family = DgpFamily::ARFIMA;
  spec.d = d;
  RngStream rng(7, 0);
  const TimeSeries s = gen_arfima(spec, 5000, rng);
  CHECK(tsf_test::sample_variance(s) ==
        doctest::Approx(theoretical).epsilon(0.10));
}

TEST_CASE("ARIMA output is exactly the cumulative sum of the same-seed ARMA") {
  const auto spec = DgpSpec::arima({0.7}, {0.1});
  RngStream a(8, 3);
  RngStream b(8, 3);
  const TimeSeries integrated = gen_arima(spec, 500, a);
  const TimeSeries increments = gen_arma(spec, 500, b);
  double acc = 0.0;
  for (std::size_t t = 0; t < 500; ++t) {
    acc += increments[t];
    CHECK(integrated[t] == acc);  // bitwise: same accumulation order
  }
  // First differences invert the integration to machine precision.
  double prev = 0.0;
  for (std::size_t t = 0; t < 500; ++t) {
    CHECK(integrated[t] - prev ==
          doctest::Approx(increments[t]).epsilon(1e-9));
    prev = integrated[t];
  }
}

TEST_CASE("ARIMA rejects d != 1") {
  DgpSpec spec = DgpSpec::arima({0.1}, {0.3});
  spec.d = 2.0;
  RngStream rng(1, 1);
  CHECK_THROWS(gen_arima(spec, 100, rng));
}

TEST_CASE("random-walk terminal variance grows like T") {
  const auto spec = DgpSpec::arima({}, {});
  const std::size_t T = 100;
  const int reps = 400;
  double sq = 0.0;
  RngStream rng(10, 0);
  for (int r = 0; r < reps; ++r) {
    RngStream stream = rng.substream(static_cast<std::uint64_t>(r));
    const TimeSeries s = gen_arima(spec, T, stream);
    sq += s.back() * s.back();
  }
  CHECK(sq / reps == doctest::Approx(static_cast<double>(T)).epsilon(0.25));
}

TEST_CASE("first difference of ARIMA(1,1,1) has the ARMA(1,1) lag-1 ACF") {
  const double phi = 0.7, theta = 0.1;
  const double rho1 =
      (phi - theta) * (1.0 - phi * theta) / (1.0 + theta * theta - 2.0 * phi * theta);
  RngStream rng(12, 0);
  const TimeSeries integrated = gen_arima(DgpSpec::arima({phi}, {theta}), 2000, rng);
  std::vector<double> diff(integrated.length() - 1);
  for (std::size_t t = 1; t < integrated.length(); ++t) {
    diff[t - 1] = integrated[t] - integrated[t - 1];
  }
  CHECK(tsf_test::lag_autocorr(TimeSeries(diff), 1) ==
        doctest::Approx(rho1).epsilon(0.08));
}

TEST_CASE("GARCH unconditional variance") {
  RngStream rng(13, 0);
  const auto spec = DgpSpec::garch(0.01, {0.05}, {0.9});
  const TimeSeries s = gen_garch(spec, 5000, rng);
  CHECK(tsf_test::sample_variance(s) == doctest::Approx(0.2).epsilon(0.30));
}

TEST_CASE("degenerate GARCH is IID noise with variance alpha0") {
  RngStream rng(14, 0);
  const auto spec = DgpSpec::garch(0.25, {}, {});
  const TimeSeries s = gen_garch(spec, 5000, rng);
  CHECK(tsf_test::sample_variance(s) == doctest::Approx(0.25).epsilon(0.1));
  CHECK(std::abs(tsf_test::lag_autocorr(s, 1)) < 0.05);
}

TEST_CASE("GARCH is white in levels but correlated in squares") {
  RngStream rng(15, 0);
  const auto spec = DgpSpec::garch(0.01, {0.3}, {0.6});
  const TimeSeries s = gen_garch(spec, 5000, rng);
  CHECK(std::abs(tsf_test::lag_autocorr(s, 1)) < 0.05);

  std::vector<double> squares(s.length());
  for (std::size_t t = 0; t < s.length(); ++t) {
    squares[t] = s[t] * s[t];
  }
  CHECK(tsf_test::lag_autocorr(TimeSeries(squares), 1) > 0.05);
}

}  // TEST_SUITE
