#pragma once

#include <cstdint>
#include <random>

#include "entrobound/conductor.hpp"
#include "entrobound/counting.hpp"
#include "entrobound/twolevel.hpp"

// Reproducible random scenes for the property sweeps.  mt19937_64 plus
// hand-rolled uniform mapping keeps the streams identical across
// standard-library implementations (std distributions are not pinned down
// by the standard).

namespace entrobound {

using RandomEngine = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of the engine.
double uniform01(RandomEngine& rng);

/// Uniform in [lo, hi).
double uniform(RandomEngine& rng, double lo, double hi);

/// Log-uniform in [lo, hi), lo > 0.
double log_uniform(RandomEngine& rng, double lo, double hi);

/// Uniform integer in [lo, hi].
std::int64_t uniform_int(RandomEngine& rng, std::int64_t lo, std::int64_t hi);

/// Random onion scene satisfying every precondition of onion_report for
/// the given mechanism (confining density, fitting partitions, m*d >= 1).
OnionScene sample_onion_scene(RandomEngine& rng, Mechanism mechanism);

/// Random coax scene satisfying every precondition of coax_report.
CoaxScene sample_coax_scene(RandomEngine& rng);

/// Random valid massive-gas spec (derived mode count >= 1 guaranteed).
MassBoundSpec sample_mass_bound_spec(RandomEngine& rng);

/// Random two-level system; rho_gap spans [0, gap_hi], y log-spans
/// [1e-3, 1e3].
TwoLevelSystem sample_two_level_system(RandomEngine& rng, double gap_hi = 3.0);

}  // namespace entrobound
