#pragma once

#include <span>

namespace tsforest {

/// Largest eigenvalue modulus of the companion matrix of an AR polynomial
/// 1 - phi_1 z - ... - phi_p z^p. Strictly below 1 iff the AR part is
/// (causal) stationary. Returns 0 for an empty coefficient list.
double ar_companion_spectral_radius(std::span<const double> ar_coeffs);

/// Convenience wrapper for the strict stationarity test.
bool ar_is_stationary(std::span<const double> ar_coeffs);

}  // namespace tsforest
