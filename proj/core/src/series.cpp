#include "tsforest/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tsforest {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("TimeSeries: length must be >= 1");
  }
  for (const double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("TimeSeries: values must be finite");
    }
  }
}

double sample_mean(const TimeSeries& s) {
  double sum = 0.0;
  for (const double v : s.values()) {
    sum += v;
  }
  return sum / static_cast<double>(s.length());
}

std::vector<double> sample_acvf(const TimeSeries& s, std::size_t max_lag) {
  const std::size_t n = s.length();
  if (max_lag >= n) {
    throw std::invalid_argument("sample_acvf: max_lag must be < series length");
  }
  const double mean = sample_mean(s);
  std::vector<double> acvf(max_lag + 1, 0.0);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double sum = 0.0;
    for (std::size_t t = 0; t + k < n; ++t) {
      sum += (s[t] - mean) * (s[t + k] - mean);
    }
    acvf[k] = sum / static_cast<double>(n);
  }
  return acvf;
}

}  // namespace tsforest
