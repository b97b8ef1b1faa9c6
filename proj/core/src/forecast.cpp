#include "tsforest/forecast.hpp"

#include <stdexcept>

namespace tsforest {

std::vector<double> recursive_forecast(const OneStepPredictor& model,
                                       const TimeSeries& history,
                                       std::size_t h) {
  if (h == 0) {
    throw std::invalid_argument("recursive_forecast: horizon must be >= 1");
  }
  const std::size_t L = model.lag_count;
  if (L == 0 || !model.predict_one) {
    throw std::invalid_argument("recursive_forecast: predictor is not set up");
  }
  if (history.length() < L) {
    throw std::invalid_argument("recursive_forecast: history shorter than L");
  }

  // window[j] = value at lag j+1; starts from the observed tail, then shifts
  // each forecast in at the front.
  std::vector<double> window(L);
  for (std::size_t j = 0; j < L; ++j) {
    window[j] = history[history.length() - 1 - j];
  }
  std::vector<double> forecasts;
  forecasts.reserve(h);
  for (std::size_t k = 0; k < h; ++k) {
    const double value = model.predict_one(window);
    forecasts.push_back(value);
    for (std::size_t j = L; j-- > 1;) {
      window[j] = window[j - 1];
    }
    window[0] = value;
  }
  return forecasts;
}

ForecastResult with_truth(std::vector<double> predictions,
                          std::vector<double> truth) {
  if (predictions.size() != truth.size()) {
    throw std::invalid_argument("with_truth: length mismatch");
  }
  ForecastResult result;
  result.horizon = predictions.size();
  result.predictions = std::move(predictions);
  std::vector<double> errors(truth.size());
  for (std::size_t k = 0; k < truth.size(); ++k) {
    const double diff = result.predictions[k] - truth[k];
    errors[k] = diff * diff;
  }
  result.truth = std::move(truth);
  result.squared_errors = std::move(errors);
  return result;
}

}  // namespace tsforest
