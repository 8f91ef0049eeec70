#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "entrobound/counting.hpp"
#include "entrobound/sampling.hpp"

using namespace entrobound;

namespace {

// Brute-force occupation enumeration, the oracle for exact_log_count.
std::int64_t enumerate_states(std::int64_t particles, std::int64_t modes,
                              Statistics statistics) {
  if (modes == 0) return particles == 0 ? 1 : 0;
  std::int64_t total = 0;
  const std::int64_t cap =
      statistics == Statistics::fermion ? std::min<std::int64_t>(1, particles)
                                        : particles;
  for (std::int64_t occupancy = 0; occupancy <= cap; ++occupancy) {
    total += enumerate_states(particles - occupancy, modes - 1, statistics);
  }
  return total;
}

}  // namespace

TEST_CASE("exact counts match enumeration") {
  CHECK(exact_log_count({1, 1, Statistics::boson}) == doctest::Approx(0.0));
  CHECK(exact_log_count({2, 2, Statistics::boson}) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(exact_log_count({1, 3, Statistics::fermion}) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));

  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t omega = 1; omega <= 6; ++omega) {
      const double boson = exact_log_count({n, omega, Statistics::boson});
      CHECK(boson == doctest::Approx(std::log(static_cast<double>(
                         enumerate_states(n, omega, Statistics::boson))))
                         .epsilon(1e-10));
      if (n <= omega) {
        const double fermion = exact_log_count({n, omega, Statistics::fermion});
        CHECK(fermion == doctest::Approx(std::log(static_cast<double>(
                             enumerate_states(n, omega, Statistics::fermion))))
                             .epsilon(1e-10));
        CHECK(boson >= fermion);
      }
    }
  }
}

TEST_CASE("fermions need at least as many modes as particles") {
  CHECK_THROWS_AS(exact_log_count({4, 3, Statistics::fermion}),
                  std::domain_error);
}

TEST_CASE("exact count scales to 1e9 without overflow") {
  const double v =
      exact_log_count({1'000'000'000, 1'000'000'000, Statistics::boson});
  CHECK(std::isfinite(v));
  // Symmetric case: ln W ~ 2N ln 2 up to the dropped corrections.
  CHECK(v == doctest::Approx(2e9 * std::numbers::ln2).epsilon(1e-6));
}

TEST_CASE("stirling entropy examples") {
  CHECK(stirling_entropy(5, 5) ==
        doctest::Approx(10.0 * std::numbers::ln2).epsilon(1e-14));
  const double expected =
      std::log(1e6 + 1.0) + 1e6 * std::log1p(1e-6);  // ~14.816
  CHECK(stirling_entropy(1, 1'000'000) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(14.816).epsilon(1e-4));
  // Cross-check against the exact count: S_exact = ln(1e6) for one boson.
  CHECK(std::abs(stirling_entropy(1, 1'000'000) -
                 exact_log_count({1, 1'000'000, Statistics::boson})) <
        std::log(1.0) + std::log(1e6) + 2.0);
}

TEST_CASE("stirling agrees with exact counting at 1e6 particles") {
  const double stirling = stirling_entropy(1'000'000, 1'000'000);
  const double exact =
      exact_log_count({1'000'000, 1'000'000, Statistics::boson});
  CHECK(std::abs(stirling - exact) / exact < 1e-5);
}

TEST_CASE("stirling entropy is homogeneous of degree one") {
  for (std::int64_t n : {1, 3, 17, 1000}) {
    for (std::int64_t omega : {1, 5, 420}) {
      const double base = stirling_entropy(n, omega);
      // Power-of-two scaling is exact in floating point as well.
      CHECK(stirling_entropy(2 * n, 2 * omega) == 2.0 * base);
      CHECK(stirling_entropy(8 * n, 8 * omega) == 8.0 * base);
      CHECK(stirling_entropy(3 * n, 3 * omega) ==
            doctest::Approx(3.0 * base).epsilon(1e-13));
    }
  }
}

TEST_CASE("stirling vs exact discrepancy stays within the dropped terms") {
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (std::int64_t omega = 1; omega <= 100; ++omega) {
      const double allowance = std::log(static_cast<double>(n)) +
                               std::log(static_cast<double>(omega)) + 2.0;
      const double gap = std::abs(stirling_entropy(n, omega) -
                                  exact_log_count({n, omega, Statistics::boson}));
      CHECK(gap <= allowance);
    }
  }
}

TEST_CASE("ratio function values") {
  CHECK(ratio_function(1.0) ==
        doctest::Approx(2.0 * std::numbers::ln2).epsilon(1e-14));
  CHECK(ratio_function(0.191) == doctest::Approx(1.581).epsilon(1e-3));
  CHECK(ratio_function(1e-9) < 1e-2);  // vanishes toward the origin
  CHECK_THROWS_AS(ratio_function(0.0), std::domain_error);
  CHECK_THROWS_AS(ratio_function(-1.0), std::domain_error);
}

TEST_CASE("ratio maximum against a brute-force scan") {
  const RatioMaximum peak = maximize_ratio();
  CHECK(std::abs(peak.nbar_star - 0.191) <= 1e-3);
  CHECK(std::abs(peak.f_star - 1.581) <= 1e-3);

  RandomEngine rng(11);
  for (int i = 0; i < 10000; ++i) {
    const double x = log_uniform(rng, 1e-3, 1e3);
    CHECK(peak.f_star >= ratio_function(x));
  }
  // Interior maximum: both neighbours sit lower.
  CHECK(ratio_function(peak.nbar_star + 1e-3) < peak.f_star);
  CHECK(ratio_function(peak.nbar_star - 1e-3) < peak.f_star);
}

TEST_CASE("mass bound at one de Broglie cell") {
  // kappa * ratio / (2 pi) = 1 exactly -> Omega = 1.
  MassBoundSpec spec;
  spec.n_particles = 8;
  spec.momentum_fraction = 0.5;
  spec.compton_ratio = 2.0 * std::numbers::pi / spec.momentum_fraction;
  const MassBoundReport report = mass_bound_report(spec);
  CHECK(report.derived_modes == 1);
  CHECK(report.bound.entropy_nats ==
        doctest::Approx(stirling_entropy(8, 1)).epsilon(1e-14));
  CHECK(report.bound.bound_value ==
        doctest::Approx(2.0 * std::numbers::pi * 8.0 * spec.compton_ratio)
            .epsilon(1e-14));
  CHECK(report.bound.satisfied);
}

TEST_CASE("sub-cell system is rejected") {
  MassBoundSpec spec;
  spec.n_particles = 10;
  spec.momentum_fraction = 0.5;
  spec.compton_ratio = 1.0;  // kappa*ratio/(2 pi) < 1 -> Omega = 0
  CHECK_THROWS_AS(mass_bound_report(spec), std::domain_error);
}

TEST_CASE("every valid massive gas satisfies the rest-mass bound") {
  RandomEngine rng(12);
  for (int i = 0; i < 100000; ++i) {
    const MassBoundSpec spec = sample_mass_bound_spec(rng);
    const MassBoundReport report = mass_bound_report(spec);
    CHECK(report.bound.satisfied);
    // The chain S <= f* N^(2/3) Omega^(1/3) <= 2 pi N mu c R/hbar.
    CHECK(report.bound.entropy_nats <= report.stirling_cap * (1.0 + 1e-12));
    CHECK(report.stirling_cap <= report.bound.bound_value);
  }
}

TEST_CASE("chain inequality on the exhaustive grid") {
  const RatioMaximum peak = maximize_ratio();
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (std::int64_t omega = 1; omega <= 100; ++omega) {
      const double cap = peak.f_star *
                         std::pow(static_cast<double>(n), 2.0 / 3.0) *
                         std::pow(static_cast<double>(omega), 1.0 / 3.0);
      CHECK(stirling_entropy(n, omega) <= cap * (1.0 + 1e-3));
    }
  }
}

TEST_CASE("fermion entropy never exceeds boson entropy at scale") {
  for (std::int64_t n : {10, 100, 1000}) {
    for (std::int64_t omega : {1000, 10000}) {
      CHECK(exact_log_count({n, omega, Statistics::fermion}) <=
            exact_log_count({n, omega, Statistics::boson}));
    }
  }
}
