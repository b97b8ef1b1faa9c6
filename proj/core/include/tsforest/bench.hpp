#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tsforest/block_bootstrap.hpp"
#include "tsforest/dgp.hpp"
#include "tsforest/rng.hpp"

namespace tsforest {

/// The seven competing forecasters: six random-forest bootstrap variants and
/// the plain Yule-Walker plug-in model. Enumerator order is the canonical
/// column order of every summary table.
enum class BenchModel { ARSB, IID, MBB, CBB, NBB, SBB, YW };

std::string model_name(BenchModel model);
BenchModel parse_model(const std::string& name);
bool is_rf_model(BenchModel model);
BootstrapKind model_bootstrap(BenchModel model);  // RF models only

/// Full study description. Defaults reproduce the reference simulation grid
/// at desk scale (M = 200 instead of 1000).
struct BenchConfig {
  std::vector<DgpSpec> specs;              // empty -> paper_default_specs()
  std::vector<std::size_t> sizes{100, 500, 1000};
  std::size_t iterations = 200;            // Monte Carlo repetitions M
  std::vector<std::size_t> horizons{1, 5};
  std::vector<BenchModel> models{BenchModel::ARSB, BenchModel::IID,
                                 BenchModel::MBB,  BenchModel::CBB,
                                 BenchModel::NBB,  BenchModel::SBB,
                                 BenchModel::YW};
  std::size_t block_length = 0;   // 0 -> ceil(T^(1/3)) per series length
  bool pad_to_n = false;          // MBB padding switch
  std::size_t num_trees = 500;
  std::size_t min_node_size = 5;
  std::size_t lag_count = 0;      // 0 -> max(1, AIC-selected order), per iteration
  std::uint64_t master_seed = 20240101;
  unsigned threads = 0;           // 0 -> hardware concurrency
  /// Optional progress hook (called serially): done tasks, total tasks.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// The 24 distinct parameter configurations of the reference study (the
/// published list names 25 but repeats one ARMA pair).
std::vector<DgpSpec> paper_default_specs();

/// One (configuration, model, iteration, horizon) outcome.
struct BenchRecord {
  std::size_t dgp_index = 0;
  std::string dgp_family;
  std::string dgp_params;
  std::size_t T = 0;
  BenchModel model = BenchModel::YW;
  std::size_t iteration = 0;
  std::size_t horizon = 0;
  double squared_error = 0.0;
  double fit_seconds = 0.0;       // wall clock of the fit alone
  std::size_t selected_order = 0; // AIC order of the iteration's training series
};

struct BenchFailure {
  std::size_t dgp_index = 0;
  std::string dgp_family;
  std::string dgp_params;
  std::size_t T = 0;
  std::size_t iteration = 0;
  std::string message;
};

struct IterationSettings {
  std::vector<BenchModel> models;
  std::vector<std::size_t> horizons;
  std::size_t block_length = 0;
  bool pad_to_n = false;
  std::size_t num_trees = 500;
  std::size_t min_node_size = 5;
  std::size_t lag_count = 0;
};

/// One Monte Carlo iteration: generate T + max(h) observations, train every
/// model on the identical first T, score the h-step-ahead squared error
/// against the held-out tail. Model fits are timed individually; data
/// generation and the shared order selection are not part of fit_seconds.
std::vector<BenchRecord> run_iteration(const DgpSpec& spec, std::size_t T,
                                       const IterationSettings& settings,
                                       RngStream& rng);

/// Median with the even-count mean-of-central-pair convention.
double median_mse(std::vector<double> squared_errors);

/// Ascending ranks (1 = smallest); exact ties share the mean of the ranks
/// they span, so the ranks always sum to m(m+1)/2.
std::vector<double> rank_models(std::span<const double> medians);

struct BenchOutput {
  std::vector<BenchRecord> records;
  std::vector<BenchFailure> failures;
  std::string records_csv;
  std::string medians_csv;
  std::string ranks_csv;
  std::string runtime_csv;
  std::string meta_text;
};

/// Run the whole study. Iterations are dispatched to a worker pool with one
/// deterministic child stream per (configuration, iteration); records are
/// assembled in task order, so the CSV payload is a pure function of the
/// configuration and master seed regardless of thread count (wall-clock
/// columns excepted, by nature). A failing iteration is recorded under
/// failures and skipped, never fatal.
BenchOutput run_benchmark(const BenchConfig& cfg);

/// Write records.csv, medians.csv, ranks.csv, runtime.csv and meta.txt.
void write_outputs(const BenchOutput& output,
                   const std::filesystem::path& out_dir);

/// Load a study description from a JSON config file. Unknown keys are
/// rejected. "specs": "paper-defaults" (or omitting the key) selects the
/// built-in 24-configuration grid.
BenchConfig load_config(const std::filesystem::path& path);

}  // namespace tsforest
