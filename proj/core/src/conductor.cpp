#include "entrobound/conductor.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace entrobound {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const CarrierSpec& carrier) {
  if (!(carrier.density > 0.0) || !(carrier.mass > 0.0) ||
      !(carrier.relaxation_time > 0.0)) {
    throw std::domain_error("CarrierSpec: density, mass, tau must be > 0");
  }
  if (!(carrier.charge_sq > 0.0) || !(carrier.charge_sq <= 1.0)) {
    throw std::domain_error(
        "CarrierSpec: e^2 must lie in (0, 1] in units of hbar*c");
  }
}

void validate(const OnionScene& scene) {
  validate(scene.carrier);
  if (scene.n_shells < 1 || !(scene.outer_radius > 0.0) ||
      !(scene.partition_thickness > 0.0)) {
    throw std::domain_error("OnionScene: need n >= 1, R > 0, d > 0");
  }
  if (scene.partition_thickness * static_cast<double>(scene.n_shells) >
      scene.outer_radius) {
    throw std::domain_error("OnionScene: partitions do not fit, need d <= R/n");
  }
  if (scene.carrier.mass * scene.partition_thickness < 1.0) {
    throw std::domain_error(
        "OnionScene: carrier Compton length exceeds the partition thickness "
        "(need m*d >= 1)");
  }
}

void validate(const CoaxScene& scene) {
  validate(scene.carrier);
  if (!(scene.inner_radius > 0.0) || !(scene.outer_radius > scene.inner_radius)) {
    throw std::domain_error("CoaxScene: need rho2 > rho1 > 0");
  }
  if (!(scene.sphere_radius >= scene.outer_radius)) {
    throw std::domain_error("CoaxScene: need R >= rho2");
  }
  if (!(scene.cable_length >= 10.0 * scene.sphere_radius)) {
    throw std::domain_error("CoaxScene: need L >= 10 R (coiled-up cable)");
  }
  // The coiled cable must actually fit: volume pi rho2^2 L inside (4/3)pi R^3.
  if (scene.outer_radius * scene.outer_radius * scene.cable_length >
      (4.0 / 3.0) * std::pow(scene.sphere_radius, 3)) {
    throw std::domain_error("CoaxScene: cable volume exceeds the sphere");
  }
  if (scene.carrier.mass * scene.inner_radius < 1.0) {
    throw std::domain_error(
        "CoaxScene: carrier Compton length exceeds the inner radius "
        "(need m*rho1 >= 1)");
  }
}

}  // namespace

double plasma_frequency(const CarrierSpec& carrier) {
  validate(carrier);
  return std::sqrt(4.0 * kPi * carrier.density * carrier.charge_sq /
                   carrier.mass);
}

double evanescent_depth(double omega, double omega_p) {
  if (!(omega > 0.0) || !(omega_p > 0.0)) {
    throw std::domain_error("evanescent_depth: frequencies must be > 0");
  }
  if (omega >= omega_p) {
    throw confinement_error(
        "evanescent_depth: omega >= omega_p, the wave propagates instead of "
        "decaying");
  }
  const double ratio = omega_p / omega;
  return 1.0 / (omega * std::sqrt(ratio * ratio - 1.0));
}

std::complex<double> drude_conductivity(const CarrierSpec& carrier,
                                        double omega) {
  validate(carrier);
  if (!(omega >= 0.0)) {
    throw std::domain_error("drude_conductivity: omega must be >= 0");
  }
  const std::complex<double> denom(carrier.mass / carrier.relaxation_time,
                                   -carrier.mass * omega);
  return carrier.density * carrier.charge_sq / denom;
}

double skin_depth(double omega, double sigma_real) {
  if (!(omega > 0.0) || !(sigma_real > 0.0)) {
    throw std::domain_error("skin_depth: omega and Re(sigma) must be > 0");
  }
  return 1.0 / std::sqrt(2.0 * kPi * omega * sigma_real);
}

double skin_depth_floor(const CarrierSpec& carrier) {
  validate(carrier);
  return 1.0 /
         std::sqrt(2.0 * kPi * carrier.density * carrier.charge_sq /
                   carrier.mass);
}

double minimal_confining_density(double mass, double charge_sq,
                                 double thickness, Mechanism mechanism) {
  if (!(mass > 0.0) || !(charge_sq > 0.0) || !(thickness > 0.0)) {
    throw std::domain_error("minimal_confining_density: inputs must be > 0");
  }
  const double plasma_min = mass / (4.0 * kPi * charge_sq * thickness * thickness);
  return mechanism == Mechanism::plasma ? plasma_min : 2.0 * plasma_min;
}

OnionReport onion_report(const OnionScene& scene, Mechanism mechanism) {
  validate(scene);
  const double minimal = minimal_confining_density(
      scene.carrier.mass, scene.carrier.charge_sq, scene.partition_thickness,
      mechanism);
  if (scene.carrier.density < minimal) {
    throw confinement_error(
        "onion_report: carrier density " + std::to_string(scene.carrier.density) +
        " below the confining minimum " + std::to_string(minimal) +
        "; the shells leak and the scene does not trap the photons");
  }

  const auto n = static_cast<double>(scene.n_shells);
  // Shell i has radius (i/n) R; its carrier rest energy is
  // m * density * 4 pi R^2 d * (i/n)^2.  The exact sum of (i/n)^2 is
  // (n+1)(2n+1)/(6n) >= n/3, the paper's large-n form, so small n stays honest.
  const double shell_sum = (n + 1.0) * (2.0 * n + 1.0) / (6.0 * n);
  const double wall_volume = 4.0 * kPi * scene.outer_radius *
                             scene.outer_radius * scene.partition_thickness;
  const double energy =
      scene.carrier.mass * scene.carrier.density * wall_volume * shell_sum;

  OnionReport report;
  report.carrier_energy = energy;
  report.analytic_floor =
      (mechanism == Mechanism::plasma ? 2.0 : 4.0) * std::pow(n, 4);
  report.bound =
      evaluate_bound(std::log(3.0 * n), scene.outer_radius * energy,
                     mechanism == Mechanism::plasma ? "onion/plasma"
                                                    : "onion/skin");
  return report;
}

CoaxReport coax_report(const CoaxScene& scene, CoaxMode mode) {
  validate(scene);
  const double rho1 = scene.inner_radius;
  const double minimal =
      scene.carrier.mass / (4.0 * kPi * scene.carrier.charge_sq * rho1 * rho1);
  if (scene.carrier.density < minimal) {
    throw confinement_error(
        "coax_report: carrier density below m/(4 pi e^2 rho1^2); evanescent "
        "waves bridge the inner conductor");
  }

  const double energy = kPi * rho1 * rho1 * scene.cable_length *
                        scene.carrier.density * scene.carrier.mass;

  CoaxReport report;
  report.carrier_energy = energy;
  report.analytic_floor = (kPi / 2.0) / scene.carrier.charge_sq *
                          (scene.cable_length / rho1) *
                          (scene.sphere_radius / rho1);
  report.entropy_cap =
      mode == CoaxMode::three_state
          ? std::log(3.0)
          : photon_entropy_cap(2.0 * scene.cable_length / scene.outer_radius);
  report.bound = evaluate_bound(
      report.entropy_cap, scene.sphere_radius * energy,
      mode == CoaxMode::three_state ? "coax/three_state" : "coax/multimode");
  return report;
}

double photon_entropy_cap(double n_modes) {
  if (!(n_modes >= 0.0)) {
    throw std::domain_error("photon_entropy_cap: mode count must be >= 0");
  }
  // 1 + N + N^2/2! + ... = e^N states at most, so S < ln(e^N) = N.
  return n_modes;
}

}  // namespace entrobound
