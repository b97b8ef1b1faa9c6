#include "tsforest/stationarity.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace tsforest {

double ar_companion_spectral_radius(std::span<const double> ar_coeffs) {
  const auto p = static_cast<Eigen::Index>(ar_coeffs.size());
  if (p == 0) {
    return 0.0;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    companion(0, j) = ar_coeffs[static_cast<std::size_t>(j)];
  }
  for (Eigen::Index i = 1; i < p; ++i) {
    companion(i, i - 1) = 1.0;
  }
  const Eigen::VectorXcd eigenvalues =
      Eigen::EigenSolver<Eigen::MatrixXd>(companion, false).eigenvalues();
  double radius = 0.0;
  for (Eigen::Index i = 0; i < p; ++i) {
    radius = std::max(radius, std::abs(eigenvalues(i)));
  }
  return radius;
}

bool ar_is_stationary(std::span<const double> ar_coeffs) {
  return ar_companion_spectral_radius(ar_coeffs) < 1.0;
}

}  // namespace tsforest
