#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tsforest {

/// An ordered, finite, real-valued time series of length T >= 1.
/// Immutable after construction; cheap to share by const reference.
class TimeSeries {
 public:
  /// Throws std::invalid_argument if values is empty or contains NaN/inf.
  explicit TimeSeries(std::vector<double> values);

  [[nodiscard]] std::size_t length() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] const std::vector<double>& values() const noexcept {
    return values_;
  }
  [[nodiscard]] std::span<const double> view() const noexcept {
    return values_;
  }
  [[nodiscard]] double front() const { return values_.front(); }
  [[nodiscard]] double back() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

/// Arithmetic mean of the observations.
double sample_mean(const TimeSeries& s);

/// Sample autocovariances gamma_0..gamma_max_lag with the 1/T divisor:
///
///   gamma_k = (1/T) * sum_{t=1}^{T-k} (Y_t - mean)(Y_{t+k} - mean)
///
/// The biased 1/T normalisation (rather than 1/(T-k)) is deliberate: it makes
/// the implied Toeplitz autocovariance matrix positive semi-definite, so the
/// Yule-Walker system downstream is always solvable. gamma_0 is zero only for
/// a constant series; callers must handle that case.
/// Requires 0 <= max_lag < T.
std::vector<double> sample_acvf(const TimeSeries& s, std::size_t max_lag);

}  // namespace tsforest
