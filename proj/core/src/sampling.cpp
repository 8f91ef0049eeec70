#include "entrobound/sampling.hpp"

#include <cmath>
#include <numbers>

namespace entrobound {

double uniform01(RandomEngine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(RandomEngine& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

double log_uniform(RandomEngine& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

std::int64_t uniform_int(RandomEngine& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

OnionScene sample_onion_scene(RandomEngine& rng, Mechanism mechanism) {
  OnionScene scene;
  scene.n_shells = uniform_int(rng, 1, 30);
  scene.partition_thickness = log_uniform(rng, 1e-3, 1e2);
  // Compton constraint m*d >= 1, geometry d <= R/n, density above the
  // confining minimum; every surplus factor only raises the bound side.
  scene.carrier.mass =
      log_uniform(rng, 1.0, 1e3) / scene.partition_thickness;
  scene.outer_radius = static_cast<double>(scene.n_shells) *
                       scene.partition_thickness * log_uniform(rng, 1.0, 1e2);
  scene.carrier.charge_sq = log_uniform(rng, 1e-3, 1.0);
  scene.carrier.relaxation_time = log_uniform(rng, 1e-2, 1e2);
  scene.carrier.density =
      minimal_confining_density(scene.carrier.mass, scene.carrier.charge_sq,
                                scene.partition_thickness, mechanism) *
      log_uniform(rng, 1.0, 1e3);
  return scene;
}

CoaxScene sample_coax_scene(RandomEngine& rng) {
  CoaxScene scene;
  scene.inner_radius = log_uniform(rng, 1e-3, 1e2);
  scene.outer_radius = scene.inner_radius * (1.0 + log_uniform(rng, 1e-3, 10.0));
  scene.sphere_radius = scene.outer_radius * log_uniform(rng, 1.0, 1e2);
  // L in [10 R, volume cap (4/3) R^3/rho2^2]; the sampler only emits
  // geometries a coiled cable can actually realise.
  const double l_min = 10.0 * scene.sphere_radius;
  const double l_max = (4.0 / 3.0) * std::pow(scene.sphere_radius, 3) /
                       (scene.outer_radius * scene.outer_radius);
  if (l_max < l_min) {
    // Sphere too snug around the cable cross-section; widen it until the
    // cable fits (R >= sqrt(7.5) rho2 suffices).
    scene.sphere_radius = scene.outer_radius * std::sqrt(7.5) *
                          log_uniform(rng, 1.0, 1e2);
  }
  const double cap = (4.0 / 3.0) * std::pow(scene.sphere_radius, 3) /
                     (scene.outer_radius * scene.outer_radius);
  scene.cable_length = log_uniform(rng, 10.0 * scene.sphere_radius, cap);
  scene.carrier.mass = log_uniform(rng, 1.0, 1e3) / scene.inner_radius;
  scene.carrier.charge_sq = log_uniform(rng, 1e-3, 1.0);
  scene.carrier.relaxation_time = log_uniform(rng, 1e-2, 1e2);
  const double minimal =
      scene.carrier.mass / (4.0 * std::numbers::pi * scene.carrier.charge_sq *
                            scene.inner_radius * scene.inner_radius);
  scene.carrier.density = minimal * log_uniform(rng, 1.0, 1e3);
  return scene;
}

MassBoundSpec sample_mass_bound_spec(RandomEngine& rng) {
  MassBoundSpec spec;
  spec.n_particles = uniform_int(rng, 1, 1'000'000'000);
  spec.momentum_fraction = uniform(rng, 0.05, 0.95);
  // Keep the de Broglie cell count >= 1: kappa*ratio/(2 pi) >= 1.
  spec.compton_ratio = (2.0 * std::numbers::pi / spec.momentum_fraction) *
                       log_uniform(rng, 1.0, 1e3);
  return spec;
}

TwoLevelSystem sample_two_level_system(RandomEngine& rng, double gap_hi) {
  TwoLevelSystem sys;
  sys.rho0 = log_uniform(rng, 0.5, 10.0);
  sys.rho_gap = uniform(rng, 0.0, gap_hi);
  sys.degeneracy = uniform_int(rng, 1, 1'000'000);
  sys.y = log_uniform(rng, 1e-3, 1e3);
  return sys;
}

}  // namespace entrobound
