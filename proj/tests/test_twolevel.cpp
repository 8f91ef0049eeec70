#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entrobound/bound.hpp"
#include "entrobound/sampling.hpp"
#include "entrobound/twolevel.hpp"

using namespace entrobound;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("mean energy limits") {
  TwoLevelSystem sys{2.0, 0.1, 3, 0.0};
  sys.y = 1e9;  // frozen out
  CHECK(mean_energy_radius(sys) == doctest::Approx(2.0).epsilon(1e-14));

  TwoLevelSystem even{2.0, 0.5, 1, 0.0};  // y = 0, g = 1: equal occupation
  CHECK(mean_energy_radius(even) == doctest::Approx(2.25).epsilon(1e-14));

  TwoLevelSystem mid{2.0, 0.1, 3, 1.0};
  CHECK(mean_energy_radius(mid) ==
        doctest::Approx(2.0 + 0.3 / (std::exp(1.0) + 3.0)).epsilon(1e-14));
  CHECK(mean_energy_radius(mid) == doctest::Approx(2.05246).epsilon(1e-5));
}

TEST_CASE("canonical entropy limits") {
  TwoLevelSystem frozen{2.0, 0.1, 5, 1e9};
  CHECK(canonical_entropy(frozen) == doctest::Approx(0.0).epsilon(1e-12));

  TwoLevelSystem hot{2.0, 0.1, 5, 0.0};
  CHECK(canonical_entropy(hot) == doctest::Approx(std::log(6.0)).epsilon(1e-14));

  TwoLevelSystem unit{2.0, 0.1, 1, 1.0};
  const double expected =
      1.0 / (std::exp(1.0) + 1.0) + std::log1p(std::exp(-1.0));
  CHECK(canonical_entropy(unit) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.58220).epsilon(1e-4));
}

TEST_CASE("xi specific values") {
  TwoLevelSystem sys{2.0, 0.0, 1, 0.0};
  CHECK(xi(sys) ==
        doctest::Approx(std::numbers::ln2 - 4.0 * std::numbers::pi)
            .epsilon(1e-14));
  CHECK(xi(sys) == doctest::Approx(-11.873).epsilon(1e-4));

  // At y = 2 pi rho_gap the linear term drops out.
  TwoLevelSystem at_peak{2.0, 0.5, 3, kTwoPi * 0.5};
  CHECK(xi(at_peak) ==
        doctest::Approx(std::log1p(3.0 * std::exp(-kTwoPi * 0.5)) -
                        kTwoPi * 2.0)
            .epsilon(1e-13));

  TwoLevelSystem cold{2.0, 0.5, 3, 1e9};
  CHECK(xi(cold) == doctest::Approx(-kTwoPi * 2.0).epsilon(1e-12));
  CHECK(xi(cold) < 0.0);
}

TEST_CASE("xi equals entropy minus bound side") {
  RandomEngine rng(21);
  for (int i = 0; i < 10000; ++i) {
    const TwoLevelSystem sys = sample_two_level_system(rng);
    const double direct =
        canonical_entropy(sys) - kTwoPi * mean_energy_radius(sys);
    const double rel =
        std::abs(xi(sys) - direct) / std::max(1.0, std::abs(direct));
    CHECK(rel < 1e-10);
  }
}

TEST_CASE("xi maximum: analytic location, numeric agreement") {
  TwoLevelSystem gapless{2.0, 0.0, 7, 0.0};
  const XiMaximum flat = xi_maximum(gapless);
  CHECK(flat.y_star == 0.0);
  CHECK(flat.xi_star ==
        doctest::Approx(std::log(8.0) - kTwoPi * 2.0).epsilon(1e-13));

  TwoLevelSystem sys{2.0, 0.5, 3, 0.0};
  const XiMaximum peak = xi_maximum(sys);
  CHECK(peak.y_star == doctest::Approx(kTwoPi * 0.5).epsilon(1e-14));
  CHECK(peak.xi_star == doctest::Approx(-12.44447).epsilon(1e-5));

  RandomEngine rng(22);
  for (int i = 0; i < 1000; ++i) {
    TwoLevelSystem random_sys = sample_two_level_system(rng);
    const XiMaximum analytic = xi_maximum(random_sys);
    const XiMaximum numeric = xi_maximum_numeric(random_sys);
    CHECK(std::abs(numeric.y_star - analytic.y_star) < 1e-4);
    // Local maximum: stepping off y* lowers Xi.
    TwoLevelSystem probe = random_sys;
    probe.y = analytic.y_star + 1e-2;
    CHECK(xi(probe) < analytic.xi_star);
    if (analytic.y_star > 1e-2) {
      probe.y = analytic.y_star - 1e-2;
      CHECK(xi(probe) < analytic.xi_star);
    }
  }
}

TEST_CASE("xi slope changes sign once, at the peak") {
  TwoLevelSystem sys{2.0, 0.3, 12, 0.0};
  const double y_star = kTwoPi * 0.3;
  double prev_y = 1e-4;
  auto xi_at = [&sys](double y) {
    TwoLevelSystem probe = sys;
    probe.y = y;
    return xi(probe);
  };
  for (double y = 1e-4 * 1.3; y < 1e3; y *= 1.3) {
    const double slope = xi_at(y) - xi_at(prev_y);
    if (y < y_star && prev_y < y_star) CHECK(slope > 0.0);
    if (prev_y > y_star) CHECK(slope < 0.0);
    prev_y = y;
  }
}

TEST_CASE("critical degeneracy") {
  const double crit = critical_degeneracy(0.0, 2.0);
  CHECK(crit == doctest::Approx(std::expm1(4.0 * std::numbers::pi))
                    .epsilon(1e-14));
  CHECK(crit == doctest::Approx(2.87e5).epsilon(0.004));

  // Tiny ground-state energy: any degeneracy beyond ~0 violates.
  CHECK(critical_degeneracy(0.0, 1e-12) < 1e-10);

  RandomEngine rng(23);
  for (int i = 0; i < 200; ++i) {
    const double rho_gap = uniform(rng, 0.0, 2.0);
    const double rho0 = log_uniform(rng, 0.1, 3.0);
    const double g_crit = critical_degeneracy(rho_gap, rho0);
    CHECK(xi_star_value(1.01 * g_crit, rho_gap, rho0) > 0.0);
    CHECK(xi_star_value(0.99 * g_crit, rho_gap, rho0) < 0.0);
  }
}

TEST_CASE("below critical degeneracy the bound holds at every temperature") {
  RandomEngine rng(24);
  for (int i = 0; i < 300; ++i) {
    TwoLevelSystem sys = sample_two_level_system(rng);
    const double crit = critical_degeneracy(sys.rho_gap, sys.rho0);
    if (static_cast<double>(sys.degeneracy) >= crit) continue;
    for (double y = 1e-3; y < 1e3; y *= 2.0) {
      sys.y = y;
      const BoundReport report =
          evaluate_bound(canonical_entropy(sys), mean_energy_radius(sys));
      CHECK(report.satisfied);
    }
  }
}

TEST_CASE("entropy is nonincreasing in y") {
  for (std::int64_t g : {1, 3, 1000}) {
    double prev = std::log1p(static_cast<double>(g));
    for (double y = 1e-3; y < 1e3; y *= 1.5) {
      const double s = canonical_entropy({2.0, 0.5, g, y});
      CHECK(s <= prev + 1e-15);
      prev = s;
    }
  }
}

TEST_CASE("entropy depends on y and g only") {
  const double base = canonical_entropy({2.0, 0.5, 3, 1.2});
  CHECK(canonical_entropy({7.7, 0.5, 3, 1.2}) == base);
  CHECK(canonical_entropy({2.0, 123.0, 3, 1.2}) == base);
  CHECK(canonical_entropy({0.01, 9.0, 3, 1.2}) == base);
}

TEST_CASE("species sweep finds the integer crossing") {
  const auto found =
      species_sweep(1, 0.0, {SpeciesModel::Kind::constant, 2.0}, 400000);
  REQUIRE(found.has_value());
  const auto expected = static_cast<std::int64_t>(
      std::ceil(critical_degeneracy(0.0, 2.0)));
  CHECK(*found == expected);
  CHECK(xi_star_value(static_cast<double>(*found), 0.0, 2.0) >= 0.0);
  CHECK(xi_star_value(static_cast<double>(*found - 1), 0.0, 2.0) < 0.0);
}

TEST_CASE("per-species energy cost restores the bound") {
  // c0 above ln(2)/(2 pi): ln(1 + n) < 2 pi c0 n for every n >= 1.
  const double c0 = 1.05 * std::numbers::ln2 / kTwoPi;
  const auto found = species_sweep(
      1, 0.0, {SpeciesModel::Kind::linear_in_species, c0}, 200000);
  CHECK_FALSE(found.has_value());
}

TEST_CASE("empty sweep finds nothing") {
  CHECK_FALSE(
      species_sweep(1, 0.0, {SpeciesModel::Kind::constant, 2.0}, 0).has_value());
}

TEST_CASE("invalid systems are rejected") {
  CHECK_THROWS_AS(canonical_entropy({0.0, 0.1, 3, 1.0}), std::domain_error);
  CHECK_THROWS_AS(canonical_entropy({2.0, -0.1, 3, 1.0}), std::domain_error);
  CHECK_THROWS_AS(canonical_entropy({2.0, 0.1, 0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(canonical_entropy({2.0, 0.1, 3, -1.0}), std::domain_error);
}
