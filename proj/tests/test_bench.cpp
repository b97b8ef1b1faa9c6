#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tsforest/bench.hpp"
#include "tsforest/rng.hpp"

using namespace tsforest;

namespace {

BenchConfig tiny_config() {
  BenchConfig cfg;
  cfg.specs = {DgpSpec::ar({0.5})};
  cfg.sizes = {60};
  cfg.iterations = 2;
  cfg.horizons = {1, 5};
  cfg.models = {BenchModel::IID, BenchModel::YW};
  cfg.num_trees = 5;
  cfg.master_seed = 777;
  return cfg;
}

// Strip a named column from a CSV payload (used to ignore wall-clock fields).
std::string drop_column(const std::string& csv, const std::string& column) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  std::size_t drop_index = std::string::npos;
  bool header = true;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string field;
    std::vector<std::string> row;
    while (std::getline(fields, field, ',')) {
      row.push_back(field);
    }
    if (header) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == column) {
          drop_index = i;
        }
      }
      header = false;
    }
    bool first = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == drop_index) {
        continue;
      }
      if (!first) {
        out << ',';
      }
      out << row[i];
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("median_mse conventions") {
  CHECK(median_mse({1.0}) == 1.0);
  CHECK(median_mse({1.0, 2.0, 3.0, 4.0}) == 2.5);
  CHECK(median_mse({3.0, 1.0, 2.0}) == 2.0);
  CHECK_THROWS(median_mse({}));
}

TEST_CASE("median_mse agrees with a full-sort oracle") {
  RngStream rng(100, 0);
  for (int rep = 0; rep < 1000; ++rep) {
    RngStream stream = rng.substream(static_cast<std::uint64_t>(rep));
    const std::size_t n = 1 + static_cast<std::size_t>(stream.uniform_below(50));
    std::vector<double> values(n);
    for (auto& v : values) {
      // duplicate-heavy to exercise ties
      v = std::floor(stream.uniform01() * 10.0);
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const double oracle = n % 2 == 1
                              ? sorted[n / 2]
                              : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    CHECK(median_mse(values) == oracle);
  }
}

TEST_CASE("rank_models tie conventions") {
  const auto ranks = rank_models(std::vector<double>{0.5, 0.7, 0.7, 1.0});
  REQUIRE(ranks.size() == 4);
  CHECK(ranks[0] == 1.0);
  CHECK(ranks[1] == 2.5);
  CHECK(ranks[2] == 2.5);
  CHECK(ranks[3] == 4.0);

  const auto all_tied = rank_models(std::vector<double>{2.0, 2.0, 2.0});
  for (const double r : all_tied) {
    CHECK(r == 2.0);  // (m+1)/2
  }
}

TEST_CASE("rank sums are conserved on random inputs") {
  RngStream rng(101, 0);
  for (int rep = 0; rep < 200; ++rep) {
    RngStream stream = rng.substream(static_cast<std::uint64_t>(rep));
    const std::size_t m = 2 + static_cast<std::size_t>(stream.uniform_below(8));
    std::vector<double> medians(m);
    for (auto& v : medians) {
      v = std::floor(stream.uniform01() * 4.0);
    }
    const auto ranks = rank_models(medians);
    double sum = 0.0;
    for (const double r : ranks) {
      sum += r;
    }
    CHECK(sum == doctest::Approx(static_cast<double>(m * (m + 1)) / 2.0));
  }
}

TEST_CASE("record cardinality: specs x sizes x M x models x horizons") {
  const BenchOutput out = run_benchmark(tiny_config());
  CHECK(out.failures.empty());
  CHECK(out.records.size() == 1 * 1 * 2 * 2 * 2);
  for (const BenchRecord& r : out.records) {
    if (is_rf_model(r.model)) {
      CHECK(r.fit_seconds > 0.0);
    }
  }
}

TEST_CASE("identical master seed gives identical results across thread counts") {
  BenchConfig cfg = tiny_config();
  cfg.iterations = 4;
  cfg.threads = 1;
  const BenchOutput a = run_benchmark(cfg);
  cfg.threads = 4;
  const BenchOutput b = run_benchmark(cfg);

  CHECK(a.medians_csv == b.medians_csv);
  CHECK(a.ranks_csv == b.ranks_csv);
  CHECK(drop_column(a.records_csv, "fit_seconds") ==
        drop_column(b.records_csv, "fit_seconds"));
}

TEST_CASE("forecasting pure noise with YW: median squared error near chi2(1)") {
  BenchConfig cfg;
  cfg.specs = {DgpSpec::ar({})};  // white noise
  cfg.sizes = {100};
  cfg.iterations = 1000;
  cfg.horizons = {1};
  cfg.models = {BenchModel::YW};
  cfg.master_seed = 2024;
  const BenchOutput out = run_benchmark(cfg);
  REQUIRE(out.records.size() == 1000);
  std::vector<double> errors;
  errors.reserve(out.records.size());
  for (const BenchRecord& r : out.records) {
    errors.push_back(r.squared_error);
  }
  // median of chi-squared(1) = (Phi^-1(0.75))^2
  CHECK(median_mse(errors) == doctest::Approx(0.4549).epsilon(0.22));
}

TEST_CASE("rank table layout matches the summary-table structure") {
  BenchConfig cfg = tiny_config();
  cfg.models = {BenchModel::ARSB, BenchModel::IID, BenchModel::MBB,
                BenchModel::CBB,  BenchModel::NBB, BenchModel::SBB,
                BenchModel::YW};
  cfg.num_trees = 3;
  const BenchOutput out = run_benchmark(cfg);

  std::istringstream ranks(out.ranks_csv);
  std::string header;
  std::getline(ranks, header);
  CHECK(header == "horizon,dgp_family,arsb,iid,mbb,cbb,nbb,sbb,yw");
  std::string line;
  std::size_t rows = 0;
  bool saw_overall = false;
  while (std::getline(ranks, line)) {
    ++rows;
    if (line.find(",overall,") != std::string::npos) {
      saw_overall = true;
    }
  }
  // one family row + one overall row per horizon
  CHECK(rows == 4);
  CHECK(saw_overall);
}

TEST_CASE("partial failures are recorded and skipped") {
  BenchConfig cfg = tiny_config();
  cfg.sizes = {3, 60};  // T = 3 cannot train a forest
  const BenchOutput out = run_benchmark(cfg);
  CHECK(!out.failures.empty());
  for (const BenchFailure& f : out.failures) {
    CHECK(f.T == 3);
    CHECK(!f.message.empty());
  }
  for (const BenchRecord& r : out.records) {
    CHECK(r.T == 60);
  }
  CHECK(out.meta_text.find("failures") != std::string::npos);
}

TEST_CASE("write_outputs produces the four CSV files plus metadata") {
  const BenchOutput out = run_benchmark(tiny_config());
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "tsforest_bench_test";
  std::filesystem::remove_all(dir);
  write_outputs(out, dir);
  for (const char* name :
       {"records.csv", "medians.csv", "ranks.csv", "runtime.csv", "meta.txt"}) {
    CHECK(std::filesystem::exists(dir / name));
  }
  std::ifstream records(dir / "records.csv");
  std::string header;
  std::getline(records, header);
  CHECK(header ==
        "dgp_family,dgp_params,T,strategy,iteration,horizon,squared_error,"
        "fit_seconds,selected_order");
  std::filesystem::remove_all(dir);
}

TEST_CASE("config files load and reject unknown keys") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "tsforest_cfg_test.json";
  {
    std::ofstream out(path);
    out << R"({
      "seed": 99,
      "iterations": 7,
      "sizes": [50, 80],
      "horizons": [1],
      "strategies": ["arsb", "yw"],
      "block_length": 4,
      "num_trees": 11,
      "specs": [
        {"family": "arma", "phi": [0.5], "theta": [0.2]},
        {"family": "garch", "alpha0": 0.01, "alpha": [0.05], "beta": [0.9]}
      ]
    })";
  }
  const BenchConfig cfg = load_config(path);
  CHECK(cfg.master_seed == 99);
  CHECK(cfg.iterations == 7);
  CHECK(cfg.sizes == std::vector<std::size_t>{50, 80});
  CHECK(cfg.models.size() == 2);
  CHECK(cfg.block_length == 4);
  CHECK(cfg.num_trees == 11);
  REQUIRE(cfg.specs.size() == 2);
  CHECK(cfg.specs[0].family == DgpFamily::ARMA);
  CHECK(cfg.specs[1].family == DgpFamily::GARCH);

  {
    std::ofstream out(path);
    out << R"({"tres": 10})";
  }
  CHECK_THROWS(load_config(path));

  {
    std::ofstream out(path);
    out << R"({"specs": [{"family": "ar", "phi": [1.4]}]})";
  }
  CHECK_THROWS(load_config(path));
  std::filesystem::remove(path);
}

TEST_CASE("the default grid has 24 configurations with the published counts") {
  const auto specs = paper_default_specs();
  CHECK(specs.size() == 24);
  std::map<DgpFamily, int> counts;
  for (const auto& spec : specs) {
    counts[spec.family] += 1;
  }
  CHECK(counts[DgpFamily::AR] == 6);
  CHECK(counts[DgpFamily::MA] == 6);
  CHECK(counts[DgpFamily::ARMA] == 5);
  CHECK(counts[DgpFamily::ARIMA] == 3);
  CHECK(counts[DgpFamily::ARFIMA] == 2);
  CHECK(counts[DgpFamily::GARCH] == 2);
  for (const auto& spec : specs) {
    CHECK_NOTHROW(spec.validate());
  }
}

}  // TEST_SUITE
