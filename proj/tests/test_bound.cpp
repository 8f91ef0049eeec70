#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entrobound/bound.hpp"
#include "entrobound/sampling.hpp"

using namespace entrobound;

TEST_CASE("empty system saturates the bound") {
  const BoundReport report = evaluate_bound(0.0, 0.0, "empty");
  CHECK(report.satisfied);
  CHECK(report.margin == 0.0);
  CHECK(report.bound_value == 0.0);
}

TEST_CASE("single-shell photon entropy vs the n=1 floor") {
  // ln(3n) at n=1 against a bound of 2n^4 = 2: evaluate_bound(ln 3, 2/(2 pi)).
  const BoundReport report =
      evaluate_bound(std::log(3.0), 2.0 / (2.0 * std::numbers::pi));
  CHECK(report.satisfied);
  CHECK(report.bound_value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(report.margin == doctest::Approx(2.0 - std::log(3.0)).epsilon(1e-9));
}

TEST_CASE("strong-coupling mixture violates") {
  // ln 2 against 127.5/lambda at lambda = 200 > 183.95.
  const double er = 127.5 / (2.0 * std::numbers::pi * 200.0);
  const BoundReport report = evaluate_bound(std::numbers::ln2, er);
  CHECK_FALSE(report.satisfied);
  CHECK(report.bound_value == doctest::Approx(0.6375).epsilon(1e-12));
}

TEST_CASE("negative inputs are rejected") {
  CHECK_THROWS_AS(evaluate_bound(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(evaluate_bound(1.0, -1.0), std::domain_error);
}

TEST_CASE("margin is exactly bound minus entropy") {
  RandomEngine rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double s = log_uniform(rng, 1e-6, 1e6);
    const double er = log_uniform(rng, 1e-6, 1e6);
    const BoundReport report = evaluate_bound(s, er);
    CHECK(report.margin == report.bound_value - report.entropy_nats);
    CHECK(report.satisfied == (report.margin >= 0.0));
  }
}

TEST_CASE("raising the energy never flips satisfied to violated") {
  RandomEngine rng(8);
  for (int i = 0; i < 1000; ++i) {
    const double s = log_uniform(rng, 1e-3, 1e3);
    const double er = log_uniform(rng, 1e-3, 1e3);
    const BoundReport base = evaluate_bound(s, er);
    const BoundReport more =
        evaluate_bound(s, er * (1.0 + uniform01(rng) * 10.0));
    if (base.satisfied) CHECK(more.satisfied);
  }
}
