// tsforest command line interface: simulate synthetic series, fit AR models,
// forecast with the forest or the Yule-Walker baseline, and run the full
// Monte Carlo comparison study.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tsforest/ar_sieve.hpp"
#include "tsforest/bench.hpp"
#include "tsforest/dgp.hpp"
#include "tsforest/forecast.hpp"
#include "tsforest/forest.hpp"
#include "tsforest/series_io.hpp"

namespace {

using namespace tsforest;

struct SimulateOptions {
  std::string family;
  std::vector<double> phi;
  std::vector<double> theta;
  double d = 0.3;
  double alpha0 = 0.01;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::size_t length = 500;
  std::size_t burn_in = 500;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::string output;
};

DgpSpec spec_from_options(const SimulateOptions& opt) {
  DgpSpec spec;
  switch (parse_family(opt.family)) {
    case DgpFamily::AR:
      spec = DgpSpec::ar(opt.phi);
      break;
    case DgpFamily::MA:
      spec = DgpSpec::ma(opt.theta);
      break;
    case DgpFamily::ARMA:
      spec = DgpSpec::arma(opt.phi, opt.theta);
      break;
    case DgpFamily::ARIMA:
      spec = DgpSpec::arima(opt.phi, opt.theta);
      break;
    case DgpFamily::ARFIMA:
      spec = DgpSpec::arfima(opt.phi, opt.theta, opt.d);
      break;
    case DgpFamily::GARCH:
      spec = DgpSpec::garch(opt.alpha0, opt.alpha, opt.beta);
      break;
  }
  spec.burn_in = opt.burn_in;
  return spec;
}

int run_simulate(const SimulateOptions& opt) {
  const DgpSpec spec = spec_from_options(opt);
  RngStream rng(opt.seed, opt.stream);
  const TimeSeries series = generate(spec, opt.length, rng);
  if (opt.output.empty()) {
    write_series(std::cout, series);
  } else {
    write_series_file(opt.output, series);
  }
  return 0;
}

struct FitOptions {
  std::string input;
  std::string column;
  long order = -1;  // -1 selects by AIC
  long max_order = -1;
};

int run_fit(const FitOptions& opt) {
  const TimeSeries series = read_series_file(opt.input, opt.column);
  const ArFit fit = opt.order < 0
                        ? fit_ar_auto(series, opt.max_order)
                        : fit_ar(series, static_cast<std::size_t>(opt.order));
  std::cout << to_text(fit);
  return 0;
}

struct ForecastOptions {
  std::string input;
  std::string column;
  std::size_t horizon = 1;
  std::string model = "yw";
  std::string bootstrap = "arsb";
  std::size_t block_length = 0;
  std::size_t trees = 500;
  std::size_t lags = 0;  // 0 selects max(1, AIC order)
  std::size_t min_node_size = 5;
  std::uint64_t seed = 1;
  std::string dump_trees;
};

int run_forecast(const ForecastOptions& opt) {
  const TimeSeries series = read_series_file(opt.input, opt.column);
  std::vector<double> predictions;

  if (opt.model == "yw") {
    const ArFit fit = fit_ar_auto(series);
    predictions = yw_forecast(fit, series, opt.horizon);
  } else if (opt.model == "rf") {
    ForestConfig config;
    config.num_trees = opt.trees;
    config.min_node_size = opt.min_node_size;
    config.strategy.kind = parse_bootstrap(opt.bootstrap);
    config.strategy.block_length = opt.block_length;
    config.lag_count =
        opt.lags == 0
            ? std::max<std::size_t>(
                  1, select_order_aic(series, default_max_order(series.length())))
            : opt.lags;
    const Forest forest = fit_forest(series, config, RngStream(opt.seed, 0));
    if (!opt.dump_trees.empty()) {
      std::ofstream dump(opt.dump_trees);
      if (!dump) {
        throw std::runtime_error("cannot open " + opt.dump_trees);
      }
      dump_forest(dump, forest);
    }
    OneStepPredictor predictor{
        forest.lag_count(),
        [&forest](std::span<const double> lags) { return forest.predict(lags); }};
    predictions = recursive_forecast(predictor, series, opt.horizon);
  } else {
    throw std::invalid_argument("unknown model '" + opt.model +
                                "' (expected yw or rf)");
  }

  for (const double value : predictions) {
    std::cout << format_double(value) << '\n';
  }
  return 0;
}

struct BenchOptions {
  std::string config_path;
  std::string out_dir = "bench-out";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> block_length;
  bool quiet = false;
};

int run_bench(const BenchOptions& opt) {
  BenchConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = load_config(opt.config_path);
  }
  if (opt.seed) cfg.master_seed = *opt.seed;
  if (opt.threads) cfg.threads = *opt.threads;
  if (opt.iterations) cfg.iterations = *opt.iterations;
  if (opt.block_length) cfg.block_length = *opt.block_length;
  if (!opt.quiet) {
    cfg.progress = [](std::size_t done, std::size_t total) {
      const std::size_t step = total < 50 ? 1 : total / 50;
      if (done % step == 0 || done == total) {
        std::cerr << "\r" << done << "/" << total << " iterations" << std::flush;
      }
      if (done == total) {
        std::cerr << '\n';
      }
    };
  }

  const BenchOutput output = run_benchmark(cfg);
  write_outputs(output, opt.out_dir);

  std::cout << "wrote records.csv, medians.csv, ranks.csv, runtime.csv, "
               "meta.txt to "
            << opt.out_dir << '\n';
  std::cout << output.records.size() << " records, " << output.failures.size()
            << " failed iterations\n";
  if (!output.failures.empty()) {
    std::cerr << "warning: " << output.failures.size()
              << " iterations failed; see meta.txt\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-series random forest with pluggable bootstrap"};
  app.require_subcommand(1);

  SimulateOptions sim;
  CLI::App* simulate = app.add_subcommand("simulate", "generate a synthetic series");
  simulate->add_option("--family", sim.family,
                       "ar|ma|arma|arima|arfima|garch")->required();
  simulate->add_option("--phi", sim.phi, "AR coefficients");
  simulate->add_option("--theta", sim.theta, "MA coefficients");
  simulate->add_option("--d", sim.d, "fractional difference order (arfima)");
  simulate->add_option("--alpha0", sim.alpha0, "GARCH intercept");
  simulate->add_option("--alpha", sim.alpha, "GARCH alpha coefficients");
  simulate->add_option("--beta", sim.beta, "GARCH beta coefficients");
  simulate->add_option("-T,--length", sim.length, "series length")->required();
  simulate->add_option("--burn-in", sim.burn_in, "discarded warm-up length");
  simulate->add_option("--seed", sim.seed, "random seed");
  simulate->add_option("--stream", sim.stream, "stream id");
  simulate->add_option("-o,--output", sim.output, "output file (default stdout)");

  FitOptions fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit an AR model by Yule-Walker");
  fit_cmd->add_option("-i,--input", fit.input, "series file")->required();
  fit_cmd->add_option("--column", fit.column, "CSV column name");
  fit_cmd->add_option("--order", fit.order, "fixed order (default: AIC)");
  fit_cmd->add_option("--max-order", fit.max_order, "AIC candidate bound");

  ForecastOptions fc;
  CLI::App* forecast_cmd =
      app.add_subcommand("forecast", "multi-step recursive forecast");
  forecast_cmd->add_option("-i,--input", fc.input, "series file")->required();
  forecast_cmd->add_option("--column", fc.column, "CSV column name");
  forecast_cmd->add_option("-H,--horizon", fc.horizon, "forecast horizon");
  forecast_cmd->add_option("--model", fc.model, "yw|rf");
  forecast_cmd->add_option("--bootstrap", fc.bootstrap,
                           "iid|mbb|nbb|cbb|sbb|arsb (rf model)");
  forecast_cmd->add_option("--block-length", fc.block_length,
                           "block length, 0 = ceil(T^(1/3))");
  forecast_cmd->add_option("--trees", fc.trees, "number of trees");
  forecast_cmd->add_option("--lags", fc.lags, "lag count, 0 = max(1, AIC order)");
  forecast_cmd->add_option("--min-node-size", fc.min_node_size,
                           "minimum node size");
  forecast_cmd->add_option("--seed", fc.seed, "random seed");
  forecast_cmd->add_option("--dump-trees", fc.dump_trees,
                           "write the fitted trees as text");

  BenchOptions bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run the Monte Carlo comparison study");
  bench_cmd->add_option("--config", bench.config_path, "JSON study config");
  bench_cmd->add_option("--out-dir", bench.out_dir, "output directory");
  bench_cmd->add_option("--seed", bench.seed, "master seed override");
  bench_cmd->add_option("--threads", bench.threads, "worker thread count");
  bench_cmd->add_option("--iterations", bench.iterations,
                        "Monte Carlo iterations override");
  bench_cmd->add_option("--block-length", bench.block_length,
                        "block length override");
  bench_cmd->add_flag("--quiet", bench.quiet, "suppress progress output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (fit_cmd->parsed()) return run_fit(fit);
    if (forecast_cmd->parsed()) return run_forecast(fc);
    if (bench_cmd->parsed()) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
