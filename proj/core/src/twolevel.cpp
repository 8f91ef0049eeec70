#include "entrobound/twolevel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entrobound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate(const TwoLevelSystem& sys) {
  if (!(sys.rho0 > 0.0)) {
    throw std::domain_error("TwoLevelSystem: rho0 must be > 0 (the system's "
                            "Compton length must fit inside R)");
  }
  if (!(sys.rho_gap >= 0.0) || sys.degeneracy < 1 || !(sys.y >= 0.0)) {
    throw std::domain_error("TwoLevelSystem: need rho_gap >= 0, g >= 1, y >= 0");
  }
}

/// g e^{-y}; the excited-level occupancy is t/(1+t).  Written this way the
/// formulas stay finite for arbitrarily large y.
double boltzmann_weight(double g, double y) { return g * std::exp(-y); }

}  // namespace

double mean_energy_radius(const TwoLevelSystem& sys) {
  validate(sys);
  const double t = boltzmann_weight(static_cast<double>(sys.degeneracy), sys.y);
  return sys.rho0 + sys.rho_gap * t / (1.0 + t);
}

double canonical_entropy(const TwoLevelSystem& sys) {
  validate(sys);
  const double t = boltzmann_weight(static_cast<double>(sys.degeneracy), sys.y);
  return sys.y * t / (1.0 + t) + std::log1p(t);
}

double xi(const TwoLevelSystem& sys) {
  validate(sys);
  const double t = boltzmann_weight(static_cast<double>(sys.degeneracy), sys.y);
  return (sys.y - kTwoPi * sys.rho_gap) * t / (1.0 + t) + std::log1p(t) -
         kTwoPi * sys.rho0;
}

double xi_star_value(double degeneracy, double rho_gap, double rho0) {
  return std::log1p(degeneracy * std::exp(-kTwoPi * rho_gap)) - kTwoPi * rho0;
}

XiMaximum xi_maximum(const TwoLevelSystem& sys) {
  validate(sys);
  return {kTwoPi * sys.rho_gap,
          xi_star_value(static_cast<double>(sys.degeneracy), sys.rho_gap,
                        sys.rho0)};
}

XiMaximum xi_maximum_numeric(const TwoLevelSystem& sys, double tol) {
  validate(sys);
  auto xi_at = [&sys](double y) {
    TwoLevelSystem probe = sys;
    probe.y = y;
    return xi(probe);
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = std::max(10.0, 2.0 * kTwoPi * sys.rho_gap);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = xi_at(c);
  double fd = xi_at(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = xi_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = xi_at(d);
    }
  }
  const double y = 0.5 * (a + b);
  return {y, xi_at(y)};
}

double critical_degeneracy(double rho_gap, double rho0) {
  if (!(rho_gap >= 0.0) || !(rho0 > 0.0)) {
    throw std::domain_error("critical_degeneracy: need rho_gap >= 0, rho0 > 0");
  }
  return std::exp(kTwoPi * rho_gap) * std::expm1(kTwoPi * rho0);
}

std::optional<std::int64_t> species_sweep(std::int64_t g_per_species,
                                          double rho_gap,
                                          const SpeciesModel& model,
                                          std::int64_t max_species) {
  if (g_per_species < 1 || !(rho_gap >= 0.0) || !(model.coefficient > 0.0) ||
      max_species < 0) {
    throw std::domain_error("species_sweep: parameters must be positive");
  }
  for (std::int64_t n = 1; n <= max_species; ++n) {
    const double g = static_cast<double>(n) * static_cast<double>(g_per_species);
    const double rho0 = model.kind == SpeciesModel::Kind::constant
                            ? model.coefficient
                            : model.coefficient * static_cast<double>(n);
    if (xi_star_value(g, rho_gap, rho0) >= 0.0) {
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace entrobound
