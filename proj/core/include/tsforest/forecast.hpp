#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tsforest/series.hpp"

namespace tsforest {

/// Any model that maps the L most recent values (most recent first, matching
/// the lag embedding) to a one-step prediction.
struct OneStepPredictor {
  std::size_t lag_count = 0;
  std::function<double(std::span<const double>)> predict_one;
};

/// Recursive multi-step forecast: step k forms its lag vector from the most
/// recent L values of history-plus-forecasts, so later steps feed on earlier
/// predictions. Exactly one model call per horizon step; history is never
/// modified. Requires history length >= L and h >= 1.
std::vector<double> recursive_forecast(const OneStepPredictor& model,
                                       const TimeSeries& history,
                                       std::size_t h);

struct ForecastResult {
  std::size_t horizon = 0;
  std::vector<double> predictions;
  std::optional<std::vector<double>> truth;
  std::optional<std::vector<double>> squared_errors;
};

/// Bundle predictions with observed truth; squared_errors[k] is
/// (predictions[k] - truth[k])^2.
ForecastResult with_truth(std::vector<double> predictions,
                          std::vector<double> truth);

}  // namespace tsforest
