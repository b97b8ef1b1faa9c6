#include "tsforest/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "tsforest/series_io.hpp"

namespace tsforest {

EmbeddedData lag_embed(const TimeSeries& s, std::size_t lag_count) {
  const std::size_t T = s.length();
  if (lag_count == 0 || lag_count >= T) {
    throw std::invalid_argument("lag_embed: need 1 <= L < T");
  }
  EmbeddedData data;
  data.lag_count = lag_count;
  data.row_count = T - lag_count;
  data.rows.reserve(data.row_count * lag_count);
  data.targets.reserve(data.row_count);
  for (std::size_t t = lag_count; t < T; ++t) {
    for (std::size_t j = 1; j <= lag_count; ++j) {
      data.rows.push_back(s[t - j]);
    }
    data.targets.push_back(s[t]);
  }
  return data;
}

double Tree::predict(std::span<const double> lag_vector) const {
  std::uint32_t node_id = 0;
  while (!nodes[node_id].is_leaf()) {
    const TreeNode& node = nodes[node_id];
    node_id = lag_vector[static_cast<std::size_t>(node.feature)] <= node.threshold
                  ? node.left
                  : node.right;
  }
  return nodes[node_id].prediction;
}

namespace {

// Split search over a caller-provided scratch buffer; the public overload
// below owns a temporary one.
std::optional<SplitChoice> best_split_impl(
    const EmbeddedData& data, std::span<const std::size_t> rows,
    std::span<const std::size_t> features,
    std::vector<std::pair<double, double>>& points) {
  const std::size_t m = rows.size();
  if (m < 2) {
    return std::nullopt;
  }
  double total_sum = 0.0;
  for (const std::size_t r : rows) {
    total_sum += data.targets[r];
  }
  // Minimising the weighted child variances is the same as maximising
  // sum_left^2/n_left + sum_right^2/n_right, since sum y^2 is fixed.
  const double parent_score = total_sum * total_sum / static_cast<double>(m);

  std::optional<SplitChoice> best;
  double best_score = parent_score;
  points.resize(m);  // (feature value, target)

  for (const std::size_t f : features) {
    for (std::size_t i = 0; i < m; ++i) {
      points[i] = {data.row(rows[i])[f], data.targets[rows[i]]};
    }
    std::sort(points.begin(), points.end());
    double left_sum = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
      left_sum += points[i - 1].second;
      if (points[i].first <= points[i - 1].first) {
        continue;  // can only cut between distinct feature values
      }
      const auto n_left = static_cast<double>(i);
      const auto n_right = static_cast<double>(m - i);
      const double right_sum = total_sum - left_sum;
      const double score =
          left_sum * left_sum / n_left + right_sum * right_sum / n_right;
      if (score > best_score) {
        best_score = score;
        best = SplitChoice{f, (points[i - 1].first + points[i].first) / 2.0,
                           score - parent_score};
      }
    }
  }
  return best;
}

}  // namespace

std::optional<SplitChoice> best_split(const EmbeddedData& data,
                                      std::span<const std::size_t> rows,
                                      std::span<const std::size_t> features) {
  std::vector<std::pair<double, double>> points;
  return best_split_impl(data, rows, features, points);
}

namespace {

// Tree growth works in place on one shared row buffer: each node owns the
// range [begin, end) of `rows`, partitions it stably through `row_scratch`,
// and recurses on the two subranges. No per-node allocation.
struct Grower {
  const EmbeddedData& data;
  const ForestConfig& config;
  RngStream& rng;
  std::vector<TreeNode> nodes;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> row_scratch;
  std::vector<std::pair<double, double>> split_scratch;
  std::vector<std::size_t> feature_pool;
  std::vector<std::size_t> feature_subset;

  std::size_t resolved_mtry() const {
    return config.mtry == 0
               ? std::max<std::size_t>(1, data.lag_count / 3)
               : std::min(config.mtry, data.lag_count);
  }

  // Uniform draw of mtry features without replacement, evaluated in
  // ascending index order so tie-breaking is reproducible.
  std::span<const std::size_t> sample_features() {
    const std::size_t mtry = resolved_mtry();
    if (mtry >= data.lag_count) {
      return feature_pool;
    }
    std::iota(feature_pool.begin(), feature_pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < mtry; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(
                  rng.uniform_below(data.lag_count - i));
      std::swap(feature_pool[i], feature_pool[j]);
    }
    feature_subset.assign(feature_pool.begin(),
                          feature_pool.begin() + static_cast<std::ptrdiff_t>(mtry));
    std::sort(feature_subset.begin(), feature_subset.end());
    return feature_subset;
  }

  std::uint32_t build(std::size_t begin, std::size_t end, std::size_t depth) {
    const auto node_id = static_cast<std::uint32_t>(nodes.size());
    nodes.emplace_back();
    const std::size_t count = end - begin;

    double sum = 0.0;
    bool pure = true;
    const double first_target = data.targets[rows[begin]];
    for (std::size_t i = begin; i < end; ++i) {
      sum += data.targets[rows[i]];
      pure = pure && data.targets[rows[i]] == first_target;
    }
    const double node_mean = sum / static_cast<double>(count);

    const bool depth_capped =
        config.max_depth != 0 && depth >= config.max_depth;
    std::optional<SplitChoice> split;
    if (!pure && !depth_capped && count > config.min_node_size) {
      split = best_split_impl(
          data, std::span<const std::size_t>(rows.data() + begin, count),
          sample_features(), split_scratch);
    }
    if (!split) {
      nodes[node_id].prediction = node_mean;
      return node_id;
    }

    // Stable partition preserving row order within both children.
    std::size_t left_fill = begin;
    std::size_t right_fill = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t r = rows[i];
      if (data.row(r)[split->feature] <= split->threshold) {
        rows[left_fill++] = r;
      } else {
        row_scratch[right_fill++] = r;
      }
    }
    std::copy(row_scratch.begin(),
              row_scratch.begin() + static_cast<std::ptrdiff_t>(right_fill),
              rows.begin() + static_cast<std::ptrdiff_t>(left_fill));

    nodes[node_id].feature = static_cast<std::int32_t>(split->feature);
    nodes[node_id].threshold = split->threshold;
    const std::uint32_t left_id = build(begin, left_fill, depth + 1);
    const std::uint32_t right_id = build(left_fill, end, depth + 1);
    nodes[node_id].left = left_id;
    nodes[node_id].right = right_id;
    return node_id;
  }
};

}  // namespace

Tree grow_tree(const EmbeddedData& data, std::vector<std::size_t> sample_rows,
               const ForestConfig& config, RngStream& rng) {
  if (sample_rows.empty()) {
    throw std::invalid_argument("grow_tree: empty training sample");
  }
  Grower grower{data, config, rng, {}, std::move(sample_rows), {}, {}, {}, {}};
  grower.row_scratch.resize(grower.rows.size());
  grower.feature_pool.resize(data.lag_count);
  std::iota(grower.feature_pool.begin(), grower.feature_pool.end(),
            std::size_t{0});
  grower.nodes.reserve(2 * grower.rows.size() / std::max<std::size_t>(
                                                    1, config.min_node_size));
  grower.build(0, grower.rows.size(), 0);
  Tree tree;
  tree.nodes = std::move(grower.nodes);
  return tree;
}

Tree fit_tree(const EmbeddedData& data, const ForestConfig& config,
              const TimeSeries& series, const ArFit* fit, RngStream& rng) {
  if (data.row_count == 0) {
    throw std::invalid_argument("fit_tree: empty training data");
  }
  if (config.strategy.kind == BootstrapKind::ARSB) {
    if (fit == nullptr) {
      throw std::invalid_argument("fit_tree: ARSB strategy needs an ArFit");
    }
    const TimeSeries bootstrap_series =
        arsb_resample(*fit, series.length(), rng);
    const EmbeddedData fresh = lag_embed(bootstrap_series, config.lag_count);
    std::vector<std::size_t> all_rows(fresh.row_count);
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    return grow_tree(fresh, std::move(all_rows), config, rng);
  }
  std::vector<std::size_t> rows =
      draw_row_indices(config.strategy, data.row_count, rng);
  for (auto& r : rows) {
    --r;  // resamplers speak 1-based
  }
  return grow_tree(data, std::move(rows), config, rng);
}

Forest::Forest(std::vector<Tree> trees, ForestConfig config,
               double training_mean)
    : trees_(std::move(trees)),
      config_(std::move(config)),
      training_mean_(training_mean) {}

double Forest::predict(std::span<const double> lag_vector) const {
  if (lag_vector.size() != config_.lag_count) {
    throw std::invalid_argument("Forest::predict: lag vector has wrong length");
  }
  double sum = 0.0;
  for (const Tree& tree : trees_) {
    sum += tree.predict(lag_vector);
  }
  return sum / static_cast<double>(trees_.size());
}

std::vector<double> Forest::per_tree_predictions(
    std::span<const double> lag_vector) const {
  if (lag_vector.size() != config_.lag_count) {
    throw std::invalid_argument(
        "Forest::per_tree_predictions: lag vector has wrong length");
  }
  std::vector<double> predictions;
  predictions.reserve(trees_.size());
  for (const Tree& tree : trees_) {
    predictions.push_back(tree.predict(lag_vector));
  }
  return predictions;
}

Forest fit_forest(const TimeSeries& series, const ForestConfig& config,
                  const RngStream& rng) {
  const std::size_t T = series.length();
  const std::size_t L = config.lag_count;
  if (L == 0) {
    throw std::invalid_argument("fit_forest: lag count must be >= 1");
  }
  if (T <= L + config.min_node_size) {
    throw std::invalid_argument("fit_forest: series too short (need T > L + min_node_size)");
  }
  if (config.num_trees == 0) {
    throw std::invalid_argument("fit_forest: need at least one tree");
  }

  const EmbeddedData data = lag_embed(series, L);

  ForestConfig resolved = config;
  if (resolved.mtry == 0) {
    resolved.mtry = std::max<std::size_t>(1, L / 3);
  }
  if (resolved.strategy.block_length == 0) {
    resolved.strategy.block_length =
        std::min(default_block_length(T), data.row_count);
  }

  // One shared fit for all ARSB trees; the order is chosen once by AIC.
  std::optional<ArFit> shared_fit;
  if (resolved.strategy.kind == BootstrapKind::ARSB) {
    shared_fit = fit_ar_auto(series);
  }
  const ArFit* fit_ptr = shared_fit ? &*shared_fit : nullptr;

  std::vector<Tree> trees;
  trees.reserve(resolved.num_trees);
  for (std::size_t i = 0; i < resolved.num_trees; ++i) {
    RngStream tree_rng = rng.substream(i);
    trees.push_back(fit_tree(data, resolved, series, fit_ptr, tree_rng));
  }
  return Forest(std::move(trees), std::move(resolved), sample_mean(series));
}

double predict(const Forest& forest, std::span<const double> lag_vector) {
  return forest.predict(lag_vector);
}

namespace {

void dump_node(std::ostream& out, const Tree& tree, std::uint32_t node_id,
               std::size_t depth) {
  const TreeNode& node = tree.nodes[node_id];
  for (std::size_t i = 0; i < depth; ++i) {
    out << "  ";
  }
  if (node.is_leaf()) {
    out << "leaf prediction=" << format_double(node.prediction) << '\n';
    return;
  }
  out << "split feature=" << node.feature
      << " threshold=" << format_double(node.threshold) << '\n';
  dump_node(out, tree, node.left, depth + 1);
  dump_node(out, tree, node.right, depth + 1);
}

}  // namespace

void dump_tree(std::ostream& out, const Tree& tree) {
  dump_node(out, tree, 0, 0);
}

void dump_forest(std::ostream& out, const Forest& forest) {
  for (std::size_t i = 0; i < forest.trees().size(); ++i) {
    out << "tree " << i << '\n';
    dump_node(out, forest.trees()[i], 0, 1);
  }
}

}  // namespace tsforest
