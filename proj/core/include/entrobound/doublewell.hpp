#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

// Shooting solver for the spherically symmetric scalar profile
//
//   Phi'' + (2/x) Phi' + f(Phi) = 0,   Phi(0) = a,  Phi'(0) = 0,
//
// in the rescaled radial coordinate x (x = sqrt(lambda) phi_m r for the
// quartic double well, where f(Phi) = Phi (1 - Phi^2)).  The profile ends
// at the wall: the first zero of Phi, or, for potentials whose central
// minimum prevents an exact zero, the first stationary point of the
// descent.  All integrals quoted below run from 0 to that endpoint x0.

namespace entrobound {

struct ProfileSample {
  double x;
  double phi;
  double dphi;
};

struct WellProfile {
  double amplitude = 0.0;      ///< a = Phi(0)
  std::vector<ProfileSample> samples;  ///< accepted integration steps
  double first_zero = 0.0;     ///< x0, wall location
  double terminal_phi = 0.0;   ///< Phi(x0); 0 for a genuine zero crossing
  double quartic_integral = 0.0;  ///< I = int (1 - Phi^4) x^2 dx
  double energy_factor = 0.0;     ///< F = x0 * I
  double energy_integral = 0.0;   ///< Ehat = int [Phi'^2/2 + U(Phi)] x^2 dx
  double classical_energy_factor = 0.0;  ///< x0 * Ehat = eps_c lambda R/(hbar c)
  double grad_integral = 0.0;   ///< int Phi'^2 x^2 dx
  double drive_integral = 0.0;  ///< int f(Phi) Phi x^2 dx
  double virial_residual = 0.0; ///< |grad - drive| / grad
  double tolerance = 0.0;       ///< root tolerance the profile was solved to
};

/// Self-interaction entering the field equation.  derivative_fn is the
/// drive f = -dU/dPhi; potential_fn is U itself, normalised to vanish at
/// the potential minima.
struct PotentialSpec {
  std::function<double(double)> derivative_fn;
  std::function<double(double)> potential_fn;
  int well_count = 2;
  std::string label;

  /// U = (1/4)(Phi^2 - 1)^2, f = Phi (1 - Phi^2).
  static PotentialSpec double_well();

  /// Sextic with three equivalent minima at Phi in {-1, 0, 1}:
  /// U = (curvature/2) Phi^2 (Phi^2 - 1)^2.
  static PotentialSpec three_well(double curvature = 1.0);
};

/// Solve the double-well profile for Phi(0) = amplitude in (0, 1).
/// tolerance is the absolute root tolerance on x0; the adaptive integrator
/// runs at a relative tolerance 100x tighter (1e-10 per step by default).
/// Throws std::domain_error for amplitude <= 0 and no_zero_error for
/// amplitude >= 1 (the profile is constant or grows monotonically).
WellProfile shoot_profile(double amplitude, double tolerance = 1e-8);

/// Same machinery for an arbitrary potential.  With
/// PotentialSpec::double_well() this reproduces shoot_profile exactly.
WellProfile multiwell_profile(const PotentialSpec& potential, double amplitude,
                              double tolerance = 1e-8);

/// F(a) = x0 * int (1 - Phi^4) x^2 dx for the double well.
double energy_factor(double amplitude);

/// Relative defect of the virial identity
/// int Phi'^2 x^2 dx = int f(Phi) Phi x^2 dx, recomputed from the
/// profile's stored integrals.  Solutions satisfy it to integrator
/// accuracy; hand-built non-solutions do not.
double virial_check(const WellProfile& profile);

/// Relative disagreement of the two double-well energy forms,
/// int [Phi'^2/2 + (Phi^2-1)^2/4] x^2 dx  vs  (1/4) int (1 - Phi^4) x^2 dx,
/// which coincide exactly on solutions (via the virial identity).
double energy_form_residual(const WellProfile& profile);

/// Exponent n of the power-law fit eps_c ~ R^n along the solution family,
/// anchored to the small-amplitude law I = x0^3/3:  n = ln(3 I)/ln(x0),
/// averaged over amplitude +- step.  This anchored exponent tends to 3 as
/// a -> 0 and falls only slowly with amplitude (2.86 at a = 0.98), unlike
/// the local log-derivative.  Throws std::domain_error if amplitude +- step
/// leaves (0, 1).
double scaling_exponent(double amplitude, double step = 0.005);

/// Limit of the scaling exponent as the amplitude vanishes, where the
/// profile linearises and I = x0^3/3 exactly.
inline constexpr double kAsymptoticScalingExponent = 3.0;

/// Amplitude standing in for the a -> 0 limit in reference computations.
inline constexpr double kReferenceAmplitude = 1e-3;

struct WallFloor {
  /// The field pulls the wall inward with suction suction_coeff * eps_c/R^3
  /// (suction_coeff = n/(4 pi)); the dominant-energy condition then forces
  /// wall energy >= (n/2) eps_c.
  double suction_coeff = 0.0;
  /// Total (1 + n/2) * F: field plus wall, in energy-factor units.
  double total_energy_factor = 0.0;
};

/// Wall-energy floor implied by eps_c ~ R^n: the wall must carry at least
/// (n/2) eps_c, so the complete system has E >= (1 + n/2) eps_c.
WallFloor wall_energy_floor(double energy_factor, double exponent);

/// C(a) = 2 pi (1 + n(a)/2) F(a) / 4, so that 2 pi E R/(hbar c) >= C(a)/lambda.
double bound_coefficient(double amplitude);

/// C at the a -> 0 reference (exponent 3, amplitude kReferenceAmplitude):
/// (5 pi/4) F(a_ref) ~= 127.5.  Computed once, never hardcoded.
double reference_bound_coefficient();

/// Coupling above which 2 pi E R/(hbar c) >= C0/lambda no longer clears the
/// given entropy: lambda_crit = reference_bound_coefficient()/entropy_nats.
double critical_coupling(double entropy_nats);

/// lambda <= lambda_crit is the regime where the quartic theory is
/// trustworthy; above it the theory is trivial and no violation is claimed.
enum class CouplingRegime { weak, strong };
CouplingRegime coupling_regime(double lambda, double entropy_nats);

/// Plot-ready export: header plus one "x,phi,dphi" row per sample.
void write_profile_csv(const WellProfile& profile, std::ostream& out);

}  // namespace entrobound
