#include "entrobound/counting.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace entrobound {

namespace {

void validate(const GasSpec& spec) {
  if (spec.n_particles < 1 || spec.n_modes < 1) {
    throw std::domain_error("GasSpec: need N >= 1 and Omega >= 1");
  }
  if (spec.statistics == Statistics::fermion &&
      spec.n_particles > spec.n_modes) {
    throw std::domain_error("GasSpec: fermions require N <= Omega, got N=" +
                            std::to_string(spec.n_particles) +
                            " Omega=" + std::to_string(spec.n_modes));
  }
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double exact_log_count(const GasSpec& spec) {
  validate(spec);
  const auto n = static_cast<double>(spec.n_particles);
  const auto omega = static_cast<double>(spec.n_modes);
  if (spec.statistics == Statistics::boson) {
    // W = (N+Omega-1)! / [(Omega-1)! N!] = C(N+Omega-1, N)
    return std::lgamma(n + omega) - std::lgamma(omega) - std::lgamma(n + 1.0);
  }
  return log_binomial(omega, n);
}

double stirling_entropy(std::int64_t n_particles, std::int64_t n_modes) {
  if (n_particles < 1 || n_modes < 1) {
    throw std::domain_error("stirling_entropy: need N >= 1 and Omega >= 1");
  }
  const auto n = static_cast<double>(n_particles);
  const auto omega = static_cast<double>(n_modes);
  return omega * std::log1p(n / omega) + n * std::log1p(omega / n);
}

double ratio_function(double nbar) {
  if (!(nbar > 0.0)) {
    throw std::domain_error("ratio_function: nbar must be > 0");
  }
  const double numerator = std::log1p(nbar) + nbar * std::log1p(1.0 / nbar);
  return numerator / std::pow(nbar, 2.0 / 3.0);
}

RatioMaximum maximize_ratio() {
  // f is unimodal on the physical range; bracket generously, then refine.
  constexpr double kLo = 1e-4;
  constexpr double kHi = 1e3;
  constexpr double kTol = 1e-6;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = kLo, b = kHi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = ratio_function(c);
  double fd = ratio_function(d);
  while (b - a > kTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = ratio_function(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = ratio_function(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, ratio_function(x)};
}

std::int64_t derived_mode_count(const MassBoundSpec& spec) {
  if (spec.n_particles < 1 || !(spec.compton_ratio > 0.0) ||
      !(spec.momentum_fraction > 0.0) || !(spec.momentum_fraction < 1.0)) {
    throw std::domain_error("MassBoundSpec: need N >= 1, mu*c*R/hbar > 0, "
                            "kappa in (0,1)");
  }
  const double cell = spec.momentum_fraction * spec.compton_ratio /
                      (2.0 * std::numbers::pi);
  return static_cast<std::int64_t>(std::floor(cell * cell * cell));
}

MassBoundReport mass_bound_report(const MassBoundSpec& spec) {
  const std::int64_t omega = derived_mode_count(spec);
  if (omega < 1) {
    throw std::domain_error(
        "mass_bound_report: derived mode count is zero (system smaller than "
        "one de Broglie cell)");
  }
  static const RatioMaximum peak = maximize_ratio();

  MassBoundReport report;
  report.derived_modes = omega;
  const auto n = static_cast<double>(spec.n_particles);
  const double entropy = stirling_entropy(spec.n_particles, omega);
  const double energy_radius = n * spec.compton_ratio;  // N * mu*c*R/hbar
  report.bound = evaluate_bound(entropy, energy_radius, "mass");
  report.stirling_cap =
      peak.f_star * std::pow(n, 2.0 / 3.0) *
      std::pow(static_cast<double>(omega), 1.0 / 3.0);
  return report;
}

}  // namespace entrobound
