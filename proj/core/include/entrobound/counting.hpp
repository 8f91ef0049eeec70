#pragma once

#include <cstdint>

#include "entrobound/bound.hpp"

// Microcanonical state counting for N identical particles in Omega modes,
// and the rest-mass bound check for a nonrelativistic gas.

namespace entrobound {

enum class Statistics { boson, fermion };

/// N identical particles distributed over Omega one-particle modes.
struct GasSpec {
  std::int64_t n_particles = 1;  ///< N
  std::int64_t n_modes = 1;      ///< Omega
  Statistics statistics = Statistics::boson;
};

/// Nonrelativistic massive gas characterised by its Compton ratio
/// mu*c*R/hbar and the momentum fraction kappa < 1 that caps the
/// accessible phase space.
struct MassBoundSpec {
  std::int64_t n_particles = 1;
  double compton_ratio = 1.0;      ///< mu*c*R/hbar
  double momentum_fraction = 0.5;  ///< kappa in (0,1)
};

/// ln W, where W counts the microstates of the gas.  Boson:
/// W = (N+Omega-1)! / [(Omega-1)! N!]; fermion: W = C(Omega, N).
/// Computed through log-gamma, stable for N, Omega up to 1e9.
/// Throws std::domain_error for invalid specs (fermion N > Omega).
double exact_log_count(const GasSpec& spec);

/// Two-term Stirling entropy Omega*ln(1+N/Omega) + N*ln(1+Omega/N)
/// (the ln N, ln Omega corrections are dropped).
double stirling_entropy(std::int64_t n_particles, std::int64_t n_modes);

/// f(nbar) = [ln(1+nbar) + nbar*ln(1+1/nbar)] / nbar^(2/3), the entropy
/// per N^(2/3) Omega^(1/3) as a function of the filling fraction N/Omega.
/// Unimodal on (0, inf) with a single interior maximum.
double ratio_function(double nbar);

struct RatioMaximum {
  double nbar_star;  ///< filling fraction at the maximum (~0.191)
  double f_star;     ///< maximal value (~1.581)
};

/// Golden-section maximization of ratio_function over (1e-4, 1e3),
/// refined to 1e-6 absolute in nbar.
RatioMaximum maximize_ratio();

/// Result of the rest-mass bound check S < 2*pi*N*mu*c*R/hbar.
struct MassBoundReport {
  BoundReport bound;
  std::int64_t derived_modes = 0;  ///< Omega = floor((kappa*mu*c*R/(2*pi*hbar))^3)
  double stirling_cap = 0.0;       ///< f_star * N^(2/3) * Omega^(1/3)
};

/// Number of modes accessible to the massive gas,
/// Omega = floor((kappa * compton_ratio / (2*pi))^3).
std::int64_t derived_mode_count(const MassBoundSpec& spec);

/// Evaluate the rest-mass bound: Stirling entropy of the gas against
/// 2*pi*N*(mu*c*R/hbar).  Throws std::domain_error when the derived mode
/// count is zero (system smaller than one de Broglie cell).
MassBoundReport mass_bound_report(const MassBoundSpec& spec);

}  // namespace entrobound
