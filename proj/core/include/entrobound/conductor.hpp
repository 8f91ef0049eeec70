#pragma once

#include <complex>
#include <cstdint>

#include "entrobound/bound.hpp"

// Gravitating-energy floors from the charge carriers that make a structure
// conducting: plasma-frequency and skin-effect confinement, the
// concentric-shell ("onion") scene and the coiled coaxial-cable scene.

namespace entrobound {

/// Free charge carriers of a conductor.  charge_sq is e^2 in units of
/// hbar*c (so <= 1 as a matter of principle), mass and density in the
/// natural units of the scene's lengths.
struct CarrierSpec {
  double density = 1.0;          ///< N, carriers per unit volume
  double charge_sq = 1.0;        ///< e^2/(hbar c), in (0, 1]
  double mass = 1.0;             ///< m
  double relaxation_time = 1.0;  ///< tau, Drude slowing-down timescale
};

/// Which physics blocks the electromagnetic waves.
enum class Mechanism { plasma, skin };

/// omega_p = sqrt(4*pi*density*e^2/m).
double plasma_frequency(const CarrierSpec& carrier);

/// Penetration depth of an evanescent wave below the plasma cutoff:
/// delta = (1/omega) (omega_p^2/omega^2 - 1)^{-1/2}, always > 1/omega_p.
/// Throws confinement_error if omega >= omega_p (the wave propagates).
double evanescent_depth(double omega, double omega_p);

/// Drude conductivity sigma = density*e^2 / (m/tau - i m omega).
std::complex<double> drude_conductivity(const CarrierSpec& carrier,
                                        double omega);

/// Skin depth delta_s = (2*pi*omega*sigma_real)^{-1/2}.
double skin_depth(double omega, double sigma_real);

/// omega-independent lower limit of the skin depth in the Ohmic regime
/// omega << 1/tau: (2*pi*density*e^2/m)^{-1/2}.
double skin_depth_floor(const CarrierSpec& carrier);

/// Smallest carrier density that traps waves behind a barrier of
/// thickness d: plasma requires omega_p*d >= 1, skin requires the depth
/// floor to fit inside d (twice the plasma value).
double minimal_confining_density(double mass, double charge_sq, double thickness,
                                 Mechanism mechanism);

/// Sphere of radius outer_radius partitioned into n_shells concentric
/// shells by conducting walls of equal thickness.
struct OnionScene {
  std::int64_t n_shells = 1;
  double outer_radius = 1.0;        ///< R
  double partition_thickness = 1.0; ///< d, with d <= R/n and m*d >= 1
  CarrierSpec carrier;
};

struct OnionReport {
  BoundReport bound;
  double carrier_energy = 0.0;   ///< E_min, total rest energy in the partitions
  double analytic_floor = 0.0;   ///< 2 n^4 (plasma) or 4 n^4 (skin)
};

/// Photon entropy ln(3n) of the one-photon density matrix against the
/// rest energy of the carriers needed to keep the shells reflecting.
/// Throws confinement_error when the density cannot trap the waves.
OnionReport onion_report(const OnionScene& scene, Mechanism mechanism);

/// Coaxial cable of length cable_length coiled up inside a sphere of
/// radius sphere_radius; inner/outer conductor radii rho1 < rho2.
struct CoaxScene {
  double cable_length = 100.0;  ///< L, >= 10 R
  double sphere_radius = 10.0;  ///< R, >= rho2; also rho2^2 L <= (4/3) R^3
  double inner_radius = 0.1;    ///< rho1, with m*rho1 >= 1
  double outer_radius = 0.2;    ///< rho2 > rho1
  CarrierSpec carrier;
};

/// Which photon states are counted in the cable.
enum class CoaxMode {
  three_state,  ///< vacuum + one photon in either lowest mode: S = ln 3
  multimode,    ///< every transversally-nodeless state below hbar c/rho2
};

struct CoaxReport {
  BoundReport bound;
  double carrier_energy = 0.0;   ///< E_min = pi rho1^2 L density m
  double analytic_floor = 0.0;   ///< (pi/2) (1/e^2) (L/rho1) (R/rho1)
  double entropy_cap = 0.0;      ///< the cap actually used as S
};

/// Photon entropy of the coiled cable against the rest energy of the
/// inner conductor's carriers.  Throws confinement_error when
/// density*rho1^2 < m/(4*pi*e^2) (evanescent waves bridge the inner
/// conductor and the low-frequency modes are not supported).
CoaxReport coax_report(const CoaxScene& scene, CoaxMode mode);

/// Multiphoton state-count cap: the states built from n_modes low-lying
/// modes number at most e^{n_modes}, so S < n_modes.
double photon_entropy_cap(double n_modes);

}  // namespace entrobound
