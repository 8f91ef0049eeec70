#pragma once

#include <stdexcept>
#include <string>

// Natural units throughout: hbar = c = 1, entropy in nats.  Every module
// feeds this one the dimensionless product E*R, and the bound functional
// is S <= 2*pi*E*R.

namespace entrobound {

/// A cavity or structure fails to trap the radiation it is supposed to
/// confine (wave propagates, or evanescent/skin depth bridges the barrier).
/// The bound check is inapplicable to such a scene, so this is an error,
/// not a verdict.
class confinement_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A shooting solution never reaches the boundary value within the
/// integration range (e.g. amplitude >= 1, where the profile is constant
/// or monotonically increasing).
class no_zero_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Verdict of one bound evaluation: entropy vs. 2*pi*E*R.
struct BoundReport {
  double entropy_nats = 0.0;  ///< S, natural-log entropy
  double bound_value = 0.0;   ///< 2*pi*E*R (dimensionless)
  double margin = 0.0;        ///< bound_value - entropy_nats
  bool satisfied = false;     ///< margin >= 0
  std::string scenario_label;
};

/// Evaluate S <= 2*pi*E*R for nonnegative entropy and energy-radius product.
/// Throws std::domain_error on negative inputs (nonphysical scenario).
BoundReport evaluate_bound(double entropy_nats, double energy_radius_product,
                           std::string label = {});

}  // namespace entrobound
