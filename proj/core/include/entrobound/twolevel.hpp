#pragma once

#include <cstdint>
#include <optional>

// Canonical ensemble truncated to a unique ground state plus one g-fold
// degenerate excited level.  Everything is expressed through the
// dimensionless combinations rho0 = R*eps0/(hbar c), rho_gap = R*Delta/(hbar c)
// and y = beta*Delta.

namespace entrobound {

struct TwoLevelSystem {
  double rho0 = 2.0;        ///< R*eps0/(hbar c), ground-state energy scale (> 0)
  double rho_gap = 0.0;     ///< R*Delta/(hbar c), gap scale (>= 0)
  std::int64_t degeneracy = 1;  ///< g of the excited level (>= 1)
  double y = 0.0;           ///< beta*Delta (>= 0)
};

/// R*E/(hbar c) = rho0 + rho_gap * g/(e^y + g), the thermal mean energy.
double mean_energy_radius(const TwoLevelSystem& sys);

/// S(y, g) = g*y/(e^y + g) + ln(1 + g e^{-y}).  Depends on y and g only.
double canonical_entropy(const TwoLevelSystem& sys);

/// Xi(y) = S - 2*pi*R*E/(hbar c)
///       = (y - 2*pi*rho_gap) g/(e^y + g) + ln(1 + g e^{-y}) - 2*pi*rho0.
double xi(const TwoLevelSystem& sys);

struct XiMaximum {
  double y_star;   ///< 2*pi*rho_gap, location of the single maximum
  double xi_star;  ///< ln(1 + g e^{-2*pi*rho_gap}) - 2*pi*rho0
};

/// Analytic maximum of Xi over y >= 0.  The bound holds at every
/// temperature iff xi_star < 0.
XiMaximum xi_maximum(const TwoLevelSystem& sys);

/// xi_star for a real-valued degeneracy (used for threshold bracketing).
double xi_star_value(double degeneracy, double rho_gap, double rho0);

/// Numerical golden-section maximization of Xi over
/// y in [0, max(10, 4*pi*rho_gap)]; cross-check for the analytic result.
XiMaximum xi_maximum_numeric(const TwoLevelSystem& sys, double tol = 1e-6);

/// Degeneracy above which xi_star >= 0, i.e. the bound first fails at the
/// optimum temperature: g_crit = e^{2*pi*rho_gap} (e^{2*pi*rho0} - 1).
double critical_degeneracy(double rho_gap, double rho0);

/// How the ground-state energy scale responds to adding field species.
struct SpeciesModel {
  enum class Kind {
    constant,           ///< rho0 independent of the species count
    linear_in_species,  ///< rho0 = c0 * n_species (per-species Casimir/wall cost)
  };
  Kind kind = Kind::constant;
  double coefficient = 2.0;  ///< rho0 itself (constant) or c0 (linear)
};

/// Sweep the species count n = 1..max_species with total degeneracy
/// g(n) = n * g_per_species, returning the smallest n whose xi_star >= 0,
/// or nullopt if the bound survives the whole sweep.
std::optional<std::int64_t> species_sweep(std::int64_t g_per_species,
                                          double rho_gap,
                                          const SpeciesModel& model,
                                          std::int64_t max_species);

}  // namespace entrobound
