#include "tsforest/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "tsforest/ar_sieve.hpp"
#include "tsforest/forecast.hpp"
#include "tsforest/forest.hpp"
#include "tsforest/series_io.hpp"

namespace tsforest {

std::string model_name(BenchModel model) {
  switch (model) {
    case BenchModel::ARSB:
      return "arsb";
    case BenchModel::IID:
      return "iid";
    case BenchModel::MBB:
      return "mbb";
    case BenchModel::CBB:
      return "cbb";
    case BenchModel::NBB:
      return "nbb";
    case BenchModel::SBB:
      return "sbb";
    case BenchModel::YW:
      return "yw";
  }
  throw std::logic_error("model_name: unknown model");
}

BenchModel parse_model(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "arsb") return BenchModel::ARSB;
  if (lower == "iid") return BenchModel::IID;
  if (lower == "mbb") return BenchModel::MBB;
  if (lower == "cbb") return BenchModel::CBB;
  if (lower == "nbb") return BenchModel::NBB;
  if (lower == "sbb") return BenchModel::SBB;
  if (lower == "yw") return BenchModel::YW;
  throw std::invalid_argument("unknown model: " + name);
}

bool is_rf_model(BenchModel model) { return model != BenchModel::YW; }

BootstrapKind model_bootstrap(BenchModel model) {
  switch (model) {
    case BenchModel::ARSB:
      return BootstrapKind::ARSB;
    case BenchModel::IID:
      return BootstrapKind::IID;
    case BenchModel::MBB:
      return BootstrapKind::MBB;
    case BenchModel::CBB:
      return BootstrapKind::CBB;
    case BenchModel::NBB:
      return BootstrapKind::NBB;
    case BenchModel::SBB:
      return BootstrapKind::SBB;
    case BenchModel::YW:
      break;
  }
  throw std::invalid_argument("model_bootstrap: YW is not a forest model");
}

std::vector<DgpSpec> paper_default_specs() {
  std::vector<DgpSpec> specs;
  for (const double phi : {0.2, -0.2, 0.5, -0.5, 0.8, -0.8}) {
    specs.push_back(DgpSpec::ar({phi}));
  }
  for (const double theta : {0.2, -0.2, 0.5, -0.5, 0.8, -0.8}) {
    specs.push_back(DgpSpec::ma({theta}));
  }
  // The published ARMA list repeats (0.7, 0.1); deduplicated here.
  specs.push_back(DgpSpec::arma({-0.4}, {-0.2}));
  specs.push_back(DgpSpec::arma({-0.3}, {0.4}));
  specs.push_back(DgpSpec::arma({0.1}, {0.3}));
  specs.push_back(DgpSpec::arma({0.1}, {0.7}));
  specs.push_back(DgpSpec::arma({0.7}, {0.1}));
  specs.push_back(DgpSpec::arima({0.1}, {0.3}));
  specs.push_back(DgpSpec::arima({0.7}, {0.1}));
  specs.push_back(DgpSpec::arima({0.1}, {0.7}));
  specs.push_back(DgpSpec::arfima({0.3}, {0.4}, 0.3));
  specs.push_back(DgpSpec::arfima({0.7}, {0.2}, 0.3));
  specs.push_back(DgpSpec::garch(0.01, {0.3}, {0.6}));
  specs.push_back(DgpSpec::garch(0.01, {0.05}, {0.9}));
  return specs;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<BenchRecord> run_iteration(const DgpSpec& spec, std::size_t T,
                                       const IterationSettings& settings,
                                       RngStream& rng) {
  if (settings.models.empty() || settings.horizons.empty()) {
    throw std::invalid_argument("run_iteration: no models or horizons");
  }
  const std::size_t max_h =
      *std::max_element(settings.horizons.begin(), settings.horizons.end());

  RngStream gen_rng = rng.substream(0);
  const TimeSeries full = generate(spec, T + max_h, gen_rng);
  const TimeSeries train(
      std::vector<double>(full.values().begin(),
                          full.values().begin() + static_cast<std::ptrdiff_t>(T)));

  // Shared featurisation: the lag count every model sees is tied to the
  // AIC-selected order of the identical training series, so accuracy
  // differences isolate the bootstrap stage.
  const std::size_t selected_order =
      select_order_aic(train, default_max_order(T));
  const std::size_t lag_count =
      settings.lag_count == 0 ? std::max<std::size_t>(1, selected_order)
                              : settings.lag_count;

  std::vector<BenchRecord> records;
  records.reserve(settings.models.size() * settings.horizons.size());

  for (std::size_t m = 0; m < settings.models.size(); ++m) {
    const BenchModel model = settings.models[m];
    RngStream model_rng = rng.substream(1 + m);

    std::vector<double> predictions;
    double fit_seconds = 0.0;
    if (model == BenchModel::YW) {
      const auto start = Clock::now();
      const ArFit fit = fit_ar(train, selected_order);
      fit_seconds = seconds_since(start);
      predictions = yw_forecast(fit, train, max_h);
    } else {
      ForestConfig config;
      config.num_trees = settings.num_trees;
      config.min_node_size = settings.min_node_size;
      config.lag_count = lag_count;
      config.strategy.kind = model_bootstrap(model);
      config.strategy.block_length = settings.block_length;
      config.strategy.pad_to_n = settings.pad_to_n;
      const auto start = Clock::now();
      const Forest forest = fit_forest(train, config, model_rng);
      fit_seconds = seconds_since(start);
      OneStepPredictor predictor{
          lag_count,
          [&forest](std::span<const double> lags) { return forest.predict(lags); }};
      predictions = recursive_forecast(predictor, train, max_h);
    }

    for (const std::size_t h : settings.horizons) {
      const double truth = full[T + h - 1];
      const double diff = predictions[h - 1] - truth;
      BenchRecord record;
      record.dgp_family = family_name(spec.family);
      record.dgp_params = spec.param_label();
      record.T = T;
      record.model = model;
      record.horizon = h;
      record.squared_error = diff * diff;
      record.fit_seconds = fit_seconds;
      record.selected_order = selected_order;
      records.push_back(std::move(record));
    }
  }
  return records;
}

double median_mse(std::vector<double> squared_errors) {
  if (squared_errors.empty()) {
    throw std::invalid_argument("median_mse: no values");
  }
  const std::size_t n = squared_errors.size();
  const std::size_t mid = n / 2;
  std::nth_element(squared_errors.begin(),
                   squared_errors.begin() + static_cast<std::ptrdiff_t>(mid),
                   squared_errors.end());
  const double upper = squared_errors[mid];
  if (n % 2 == 1) {
    return upper;
  }
  const double lower = *std::max_element(
      squared_errors.begin(),
      squared_errors.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

std::vector<double> rank_models(std::span<const double> medians) {
  const std::size_t m = medians.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return medians[a] < medians[b];
  });
  std::vector<double> ranks(m, 0.0);
  std::size_t i = 0;
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && medians[order[j + 1]] == medians[order[i]]) {
      ++j;
    }
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = shared;
    }
    i = j + 1;
  }
  return ranks;
}

namespace {

constexpr const char* kFamilyOrder[] = {"AR",    "MA",     "ARMA",
                                        "GARCH", "ARFIMA", "ARIMA"};

struct TaskResult {
  std::vector<BenchRecord> records;
  bool failed = false;
  BenchFailure failure;
};

std::string render_records_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "dgp_family,dgp_params,T,strategy,iteration,horizon,squared_error,"
         "fit_seconds,selected_order\n";
  for (const BenchRecord& r : records) {
    out << r.dgp_family << ',' << r.dgp_params << ',' << r.T << ','
        << model_name(r.model) << ',' << r.iteration << ',' << r.horizon << ','
        << format_double(r.squared_error) << ',' << format_double(r.fit_seconds)
        << ',' << r.selected_order << '\n';
  }
  return out.str();
}

// (dgp_index, T) identifies a configuration cell.
using ConfigKey = std::pair<std::size_t, std::size_t>;

struct ConfigInfo {
  std::string family;
  std::string params;
};

std::string render_medians_csv(
    const std::vector<BenchRecord>& records,
    const std::vector<BenchModel>& models,
    const std::vector<std::size_t>& horizons) {
  std::map<ConfigKey, ConfigInfo> configs;
  std::map<std::tuple<std::size_t, std::size_t, BenchModel, std::size_t>,
           std::vector<double>>
      cells;
  for (const BenchRecord& r : records) {
    configs[{r.dgp_index, r.T}] = {r.dgp_family, r.dgp_params};
    cells[{r.dgp_index, r.T, r.model, r.horizon}].push_back(r.squared_error);
  }
  std::ostringstream out;
  out << "dgp_family,dgp_params,T,strategy,horizon,median_mse\n";
  for (const auto& [key, info] : configs) {
    for (const BenchModel model : models) {
      for (const std::size_t h : horizons) {
        const auto it = cells.find({key.first, key.second, model, h});
        if (it == cells.end()) {
          continue;
        }
        out << info.family << ',' << info.params << ',' << key.second << ','
            << model_name(model) << ',' << h << ','
            << format_double(median_mse(it->second)) << '\n';
      }
    }
  }
  return out.str();
}

std::string render_ranks_csv(const std::vector<BenchRecord>& records,
                             const std::vector<BenchModel>& models,
                             const std::vector<std::size_t>& horizons) {
  std::map<ConfigKey, std::string> config_family;
  std::map<std::tuple<std::size_t, std::size_t, BenchModel, std::size_t>,
           std::vector<double>>
      cells;
  for (const BenchRecord& r : records) {
    config_family[{r.dgp_index, r.T}] = r.dgp_family;
    cells[{r.dgp_index, r.T, r.model, r.horizon}].push_back(r.squared_error);
  }

  std::ostringstream out;
  out << "horizon,dgp_family";
  for (const BenchModel model : models) {
    out << ',' << model_name(model);
  }
  out << '\n';

  for (const std::size_t h : horizons) {
    // family -> (per-model rank sums, config count)
    std::map<std::string, std::pair<std::vector<double>, std::size_t>> by_family;
    std::vector<double> overall_sum(models.size(), 0.0);
    std::size_t overall_count = 0;

    for (const auto& [key, family] : config_family) {
      std::vector<double> medians;
      medians.reserve(models.size());
      bool complete = true;
      for (const BenchModel model : models) {
        const auto it = cells.find({key.first, key.second, model, h});
        if (it == cells.end()) {
          complete = false;
          break;
        }
        medians.push_back(median_mse(it->second));
      }
      if (!complete) {
        continue;  // a partially failed configuration cannot be ranked
      }
      const std::vector<double> ranks = rank_models(medians);
      auto& [sums, count] = by_family[family];
      if (sums.empty()) {
        sums.assign(models.size(), 0.0);
      }
      for (std::size_t m = 0; m < models.size(); ++m) {
        sums[m] += ranks[m];
        overall_sum[m] += ranks[m];
      }
      ++count;
      ++overall_count;
    }

    for (const char* family : kFamilyOrder) {
      const auto it = by_family.find(family);
      if (it == by_family.end()) {
        continue;
      }
      out << h << ',' << family;
      for (std::size_t m = 0; m < models.size(); ++m) {
        out << ','
            << format_double(it->second.first[m] /
                             static_cast<double>(it->second.second));
      }
      out << '\n';
    }
    if (overall_count > 0) {
      out << h << ",overall";
      for (std::size_t m = 0; m < models.size(); ++m) {
        out << ','
            << format_double(overall_sum[m] / static_cast<double>(overall_count));
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string render_runtime_csv(const std::vector<BenchRecord>& records,
                               const std::vector<BenchModel>& models,
                               std::size_t first_horizon) {
  std::vector<BenchModel> rf_models;
  for (const BenchModel model : models) {
    if (is_rf_model(model)) {
      rf_models.push_back(model);
    }
  }

  struct FamilyStats {
    double order_sum = 0.0;
    std::size_t order_count = 0;
    std::map<BenchModel, std::pair<double, std::size_t>> fit_time;
  };
  std::map<std::string, FamilyStats> by_family;
  FamilyStats overall;

  const BenchModel order_model = models.front();
  for (const BenchRecord& r : records) {
    if (r.horizon != first_horizon) {
      continue;  // one fit per (config, model, iteration); count it once
    }
    FamilyStats& stats = by_family[r.dgp_family];
    if (r.model == order_model) {
      stats.order_sum += static_cast<double>(r.selected_order);
      stats.order_count += 1;
      overall.order_sum += static_cast<double>(r.selected_order);
      overall.order_count += 1;
    }
    if (is_rf_model(r.model)) {
      auto& [sum, count] = stats.fit_time[r.model];
      sum += r.fit_seconds;
      count += 1;
      auto& [osum, ocount] = overall.fit_time[r.model];
      osum += r.fit_seconds;
      ocount += 1;
    }
  }

  std::ostringstream out;
  out << "dgp_family,mean_selected_order";
  for (const BenchModel model : rf_models) {
    out << ',' << model_name(model);
  }
  out << '\n';
  auto emit_row = [&](const std::string& label, const FamilyStats& stats) {
    out << label << ','
        << format_double(stats.order_count == 0
                             ? 0.0
                             : stats.order_sum /
                                   static_cast<double>(stats.order_count));
    for (const BenchModel model : rf_models) {
      const auto it = stats.fit_time.find(model);
      if (it == stats.fit_time.end() || it->second.second == 0) {
        out << ",";
      } else {
        out << ','
            << format_double(it->second.first /
                             static_cast<double>(it->second.second));
      }
    }
    out << '\n';
  };
  for (const char* family : kFamilyOrder) {
    const auto it = by_family.find(family);
    if (it != by_family.end()) {
      emit_row(family, it->second);
    }
  }
  if (overall.order_count > 0) {
    emit_row("overall", overall);
  }
  return out.str();
}

std::string render_meta(const BenchConfig& cfg, unsigned threads,
                        const std::vector<BenchRecord>& records,
                        const std::vector<BenchFailure>& failures,
                        const std::vector<DgpSpec>& specs) {
  std::ostringstream out;
  out << "generator " << RngStream::generator_id() << '\n';
  out << "master_seed " << cfg.master_seed << '\n';
  out << "iterations " << cfg.iterations << '\n';
  out << "sizes";
  for (const std::size_t T : cfg.sizes) out << ' ' << T;
  out << '\n';
  out << "horizons";
  for (const std::size_t h : cfg.horizons) out << ' ' << h;
  out << '\n';
  out << "models";
  for (const BenchModel m : cfg.models) out << ' ' << model_name(m);
  out << '\n';
  if (cfg.block_length == 0) {
    out << "block_length auto ceil(T^(1/3)):";
    for (const std::size_t T : cfg.sizes) {
      out << ' ' << T << "->" << default_block_length(T);
    }
    out << '\n';
  } else {
    out << "block_length " << cfg.block_length << '\n';
  }
  out << "pad_to_n " << (cfg.pad_to_n ? "true" : "false") << '\n';
  out << "num_trees " << cfg.num_trees << '\n';
  out << "min_node_size " << cfg.min_node_size << '\n';
  out << "lag_count "
      << (cfg.lag_count == 0 ? std::string("auto max(1, aic_order)")
                             : std::to_string(cfg.lag_count))
      << '\n';
  out << "threads " << threads << '\n';
  out << "specs " << specs.size() << '\n';
  for (const DgpSpec& spec : specs) {
    out << "  " << family_name(spec.family) << ' ' << spec.param_label() << '\n';
  }
  out << "records " << records.size() << '\n';
  out << "failures " << failures.size() << '\n';
  for (const BenchFailure& f : failures) {
    out << "  " << f.dgp_family << ' ' << f.dgp_params << " T=" << f.T
        << " iteration=" << f.iteration << ": " << f.message << '\n';
  }
  return out.str();
}

}  // namespace

BenchOutput run_benchmark(const BenchConfig& cfg) {
  if (cfg.iterations == 0) {
    throw std::invalid_argument("run_benchmark: iterations must be >= 1");
  }
  if (cfg.sizes.empty() || cfg.models.empty() || cfg.horizons.empty()) {
    throw std::invalid_argument("run_benchmark: empty sizes, models or horizons");
  }
  const std::vector<DgpSpec> specs =
      cfg.specs.empty() ? paper_default_specs() : cfg.specs;
  for (const DgpSpec& spec : specs) {
    spec.validate();
  }

  IterationSettings settings;
  settings.models = cfg.models;
  settings.horizons = cfg.horizons;
  settings.block_length = cfg.block_length;
  settings.pad_to_n = cfg.pad_to_n;
  settings.num_trees = cfg.num_trees;
  settings.min_node_size = cfg.min_node_size;
  settings.lag_count = cfg.lag_count;

  const std::size_t config_count = specs.size() * cfg.sizes.size();
  const std::size_t task_count = config_count * cfg.iterations;
  std::vector<TaskResult> results(task_count);

  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const unsigned threads =
      std::min<unsigned>(cfg.threads == 0 ? hardware : cfg.threads,
                         static_cast<unsigned>(task_count));

  const RngStream root(cfg.master_seed, 0);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> done_tasks{0};
  std::mutex progress_mutex;

  auto worker = [&]() {
    while (true) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= task_count) {
        return;
      }
      const std::size_t config_id = task / cfg.iterations;
      const std::size_t iteration = task % cfg.iterations;
      const std::size_t spec_index = config_id / cfg.sizes.size();
      const std::size_t T = cfg.sizes[config_id % cfg.sizes.size()];
      const DgpSpec& spec = specs[spec_index];

      TaskResult& slot = results[task];
      RngStream rng = root.substream(config_id).substream(iteration);
      try {
        slot.records = run_iteration(spec, T, settings, rng);
        for (BenchRecord& r : slot.records) {
          r.dgp_index = spec_index;
          r.iteration = iteration;
        }
      } catch (const std::exception& e) {
        slot.failed = true;
        slot.failure = BenchFailure{spec_index,
                                    family_name(spec.family),
                                    spec.param_label(),
                                    T,
                                    iteration,
                                    e.what()};
      }
      const std::size_t done = done_tasks.fetch_add(1) + 1;
      if (cfg.progress) {
        const std::lock_guard<std::mutex> lock(progress_mutex);
        cfg.progress(done, task_count);
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) {
    t.join();
  }

  BenchOutput output;
  for (TaskResult& slot : results) {
    if (slot.failed) {
      output.failures.push_back(std::move(slot.failure));
    } else {
      for (BenchRecord& r : slot.records) {
        output.records.push_back(std::move(r));
      }
    }
  }

  output.records_csv = render_records_csv(output.records);
  output.medians_csv =
      render_medians_csv(output.records, cfg.models, cfg.horizons);
  output.ranks_csv = render_ranks_csv(output.records, cfg.models, cfg.horizons);
  output.runtime_csv =
      render_runtime_csv(output.records, cfg.models, cfg.horizons.front());
  output.meta_text = render_meta(cfg, threads, output.records, output.failures,
                                 specs);
  return output;
}

void write_outputs(const BenchOutput& output,
                   const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto write = [&](const char* name, const std::string& content) {
    std::ofstream file(out_dir / name, std::ios::binary);
    if (!file) {
      throw std::runtime_error(std::string("cannot write ") + name);
    }
    file << content;
  };
  write("records.csv", output.records_csv);
  write("medians.csv", output.medians_csv);
  write("ranks.csv", output.ranks_csv);
  write("runtime.csv", output.runtime_csv);
  write("meta.txt", output.meta_text);
}

namespace {

DgpSpec spec_from_json(const nlohmann::json& j) {
  const auto family = parse_family(j.at("family").get<std::string>());
  auto coeffs = [&](const char* key) {
    return j.contains(key) ? j.at(key).get<std::vector<double>>()
                           : std::vector<double>{};
  };
  DgpSpec spec;
  switch (family) {
    case DgpFamily::AR:
      spec = DgpSpec::ar(coeffs("phi"));
      break;
    case DgpFamily::MA:
      spec = DgpSpec::ma(coeffs("theta"));
      break;
    case DgpFamily::ARMA:
      spec = DgpSpec::arma(coeffs("phi"), coeffs("theta"));
      break;
    case DgpFamily::ARIMA:
      spec = DgpSpec::arima(coeffs("phi"), coeffs("theta"));
      break;
    case DgpFamily::ARFIMA:
      spec = DgpSpec::arfima(coeffs("phi"), coeffs("theta"),
                             j.at("d").get<double>());
      break;
    case DgpFamily::GARCH:
      spec = DgpSpec::garch(j.at("alpha0").get<double>(), coeffs("alpha"),
                            coeffs("beta"));
      break;
  }
  if (j.contains("burn_in")) {
    spec.burn_in = j.at("burn_in").get<std::size_t>();
  }
  return spec;
}

}  // namespace

BenchConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_config: cannot open " + path.string());
  }
  nlohmann::json j;
  in >> j;

  static const std::vector<std::string> known_keys = {
      "specs",      "sizes",     "iterations",    "horizons",
      "strategies", "block_length", "pad_to_n",   "num_trees",
      "min_node_size", "lag_count", "seed",       "threads"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known_keys.begin(), known_keys.end(), key) ==
        known_keys.end()) {
      throw std::invalid_argument("load_config: unknown key '" + key + "'");
    }
  }

  BenchConfig cfg;
  if (j.contains("specs") && !j.at("specs").is_string()) {
    for (const auto& spec_json : j.at("specs")) {
      cfg.specs.push_back(spec_from_json(spec_json));
    }
    if (cfg.specs.empty()) {
      throw std::invalid_argument("load_config: specs must not be empty");
    }
  } else if (j.contains("specs") &&
             j.at("specs").get<std::string>() != "paper-defaults") {
    throw std::invalid_argument(
        "load_config: specs must be a list or \"paper-defaults\"");
  }
  if (j.contains("sizes")) {
    cfg.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  }
  if (j.contains("iterations")) {
    cfg.iterations = j.at("iterations").get<std::size_t>();
  }
  if (j.contains("horizons")) {
    cfg.horizons = j.at("horizons").get<std::vector<std::size_t>>();
  }
  if (j.contains("strategies")) {
    cfg.models.clear();
    for (const auto& name : j.at("strategies")) {
      cfg.models.push_back(parse_model(name.get<std::string>()));
    }
  }
  if (j.contains("block_length")) {
    cfg.block_length = j.at("block_length").get<std::size_t>();
  }
  if (j.contains("pad_to_n")) {
    cfg.pad_to_n = j.at("pad_to_n").get<bool>();
  }
  if (j.contains("num_trees")) {
    cfg.num_trees = j.at("num_trees").get<std::size_t>();
  }
  if (j.contains("min_node_size")) {
    cfg.min_node_size = j.at("min_node_size").get<std::size_t>();
  }
  if (j.contains("lag_count")) {
    cfg.lag_count = j.at("lag_count").get<std::size_t>();
  }
  if (j.contains("seed")) {
    cfg.master_seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("threads")) {
    cfg.threads = j.at("threads").get<unsigned>();
  }
  return cfg;
}

}  // namespace tsforest
