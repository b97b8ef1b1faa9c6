#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tsforest/ar_sieve.hpp"
#include "tsforest/block_bootstrap.hpp"
#include "tsforest/rng.hpp"
#include "tsforest/series.hpp"

namespace tsforest {

/// Lag embedding of a series: row for target Y_t (t = L+1..T) holds the L
/// preceding observations (Y_{t-1}, ..., Y_{t-L}), so feature j is lag j+1.
struct EmbeddedData {
  std::vector<double> rows;     // row-major, row_count x lag_count
  std::vector<double> targets;  // row_count entries
  std::size_t lag_count = 0;
  std::size_t row_count = 0;

  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {rows.data() + i * lag_count, lag_count};
  }
};

/// Requires 1 <= L < T; produces n = T - L rows.
EmbeddedData lag_embed(const TimeSeries& s, std::size_t lag_count);

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  double prediction = 0.0;    // leaf only: mean of the node's training targets
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  [[nodiscard]] bool is_leaf() const noexcept { return feature < 0; }
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  /// Route a lag vector to its leaf (value <= threshold goes left).
  [[nodiscard]] double predict(std::span<const double> lag_vector) const;
};

struct SplitChoice {
  std::size_t feature = 0;
  double threshold = 0.0;
  double impurity_decrease = 0.0;  // parent SSE minus best weighted child SSE
};

/// Best variance-impurity split over the candidate features: all midpoints
/// between consecutive distinct sorted values are scanned and the split
/// minimising n_left*Var(left) + n_right*Var(right) wins. Exact ties break
/// toward the lower feature index, then the lower threshold. Returns nullopt
/// when no split strictly reduces the weighted impurity (pure node, constant
/// candidate features).
std::optional<SplitChoice> best_split(const EmbeddedData& data,
                                      std::span<const std::size_t> rows,
                                      std::span<const std::size_t> features);

struct ForestConfig {
  std::size_t num_trees = 500;
  std::size_t mtry = 0;           // 0 -> max(1, floor(L/3))
  std::size_t min_node_size = 5;  // nodes this small are not split further
  std::size_t max_depth = 0;      // 0 -> unlimited
  ResampleStrategy strategy;
  std::size_t lag_count = 1;      // L
};

/// Deterministic CART growth on a fixed training sample (0-based row ids
/// into `data`, duplicates allowed). Exposed separately from fit_tree so the
/// resampling stage and the growth stage can be exercised independently.
Tree grow_tree(const EmbeddedData& data, std::vector<std::size_t> sample_rows,
               const ForestConfig& config, RngStream& rng);

/// One bootstrap + growth round. Index-based strategies resample rows of
/// `data` and never copy observations; ARSB regenerates a fresh series of
/// the original length through the fitted recursion and embeds it, so its
/// training rows are in general not rows of `data` at all. ARSB requires
/// `fit`; the other strategies ignore it.
Tree fit_tree(const EmbeddedData& data, const ForestConfig& config,
              const TimeSeries& series, const ArFit* fit, RngStream& rng);

class Forest {
 public:
  Forest(std::vector<Tree> trees, ForestConfig config, double training_mean);

  [[nodiscard]] const std::vector<Tree>& trees() const noexcept {
    return trees_;
  }
  [[nodiscard]] const ForestConfig& config() const noexcept { return config_; }
  [[nodiscard]] std::size_t lag_count() const noexcept {
    return config_.lag_count;
  }
  [[nodiscard]] double training_mean() const noexcept { return training_mean_; }

  /// Mean of the per-tree leaf values, summed in tree-index order.
  [[nodiscard]] double predict(std::span<const double> lag_vector) const;

  [[nodiscard]] std::vector<double> per_tree_predictions(
      std::span<const double> lag_vector) const;

 private:
  std::vector<Tree> trees_;
  ForestConfig config_;
  double training_mean_ = 0.0;
};

/// Train a forest on a series. Each tree draws from its own child stream
/// (stream id = tree index) so the result is independent of build order.
/// With the ARSB strategy one AIC-order fit is computed up front and shared
/// read-only by all trees. Requires T > L + min_node_size.
Forest fit_forest(const TimeSeries& series, const ForestConfig& config,
                  const RngStream& rng);

/// Forest prediction for a lag vector of exactly L values.
double predict(const Forest& forest, std::span<const double> lag_vector);

/// Human-readable tree structure, for debugging.
void dump_tree(std::ostream& out, const Tree& tree);
void dump_forest(std::ostream& out, const Forest& forest);

}  // namespace tsforest
