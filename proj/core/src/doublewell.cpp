#include "entrobound/doublewell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "entrobound/bound.hpp"

namespace entrobound {

namespace {

constexpr double kSeriesStart = 1e-4;  // start past the coordinate singularity
constexpr double kMaxRadius = 200.0;
constexpr double kMaxStep = 0.2;

// State: [phi, dphi, I_quartic, J_grad, J_drive, E_hat]
using State = std::array<double, 6>;

struct Rhs {
  const PotentialSpec& pot;

  State operator()(double x, const State& y) const {
    const double phi = y[0];
    const double dphi = y[1];
    const double f = pot.derivative_fn(phi);
    const double x2 = x * x;
    const double phi2 = phi * phi;
    return {dphi,
            -2.0 / x * dphi - f,
            (1.0 - phi2 * phi2) * x2,
            dphi * dphi * x2,
            f * phi * x2,
            (0.5 * dphi * dphi + pot.potential_fn(phi)) * x2};
  }
};

State axpy(const State& y, double h, const State& k) {
  State out;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + h * k[i];
  return out;
}

// Dormand-Prince 5(4).  k1 is reused from the previous step (FSAL).
struct DopriStep {
  State y_new;
  double error;  // scaled max-norm error estimate
  State k_last;
};

DopriStep dopri_step(const Rhs& rhs, double x, const State& y, double h,
                     const State& k1, double rtol, double atol) {
  const State k2 = rhs(x + h / 5.0, axpy(y, h / 5.0, k1));
  State s;
  for (std::size_t i = 0; i < 6; ++i)
    s[i] = y[i] + h * (3.0 / 40.0 * k1[i] + 9.0 / 40.0 * k2[i]);
  const State k3 = rhs(x + 3.0 / 10.0 * h, s);
  for (std::size_t i = 0; i < 6; ++i)
    s[i] = y[i] + h * (44.0 / 45.0 * k1[i] - 56.0 / 15.0 * k2[i] +
                       32.0 / 9.0 * k3[i]);
  const State k4 = rhs(x + 4.0 / 5.0 * h, s);
  for (std::size_t i = 0; i < 6; ++i)
    s[i] = y[i] + h * (19372.0 / 6561.0 * k1[i] - 25360.0 / 2187.0 * k2[i] +
                       64448.0 / 6561.0 * k3[i] - 212.0 / 729.0 * k4[i]);
  const State k5 = rhs(x + 8.0 / 9.0 * h, s);
  for (std::size_t i = 0; i < 6; ++i)
    s[i] = y[i] + h * (9017.0 / 3168.0 * k1[i] - 355.0 / 33.0 * k2[i] +
                       46732.0 / 5247.0 * k3[i] + 49.0 / 176.0 * k4[i] -
                       5103.0 / 18656.0 * k5[i]);
  const State k6 = rhs(x + h, s);
  State y_new;
  for (std::size_t i = 0; i < 6; ++i)
    y_new[i] = y[i] + h * (35.0 / 384.0 * k1[i] + 500.0 / 1113.0 * k3[i] +
                           125.0 / 192.0 * k4[i] - 2187.0 / 6784.0 * k5[i] +
                           11.0 / 84.0 * k6[i]);
  const State k7 = rhs(x + h, y_new);

  double err = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    const double e = h * (71.0 / 57600.0 * k1[i] - 71.0 / 16695.0 * k3[i] +
                          71.0 / 1920.0 * k4[i] - 17253.0 / 339200.0 * k5[i] +
                          22.0 / 525.0 * k6[i] - 1.0 / 40.0 * k7[i]);
    const double scale =
        atol + rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
    err = std::max(err, std::abs(e) / scale);
  }
  return {y_new, err, k7};
}

// Fixed-substep RK4 from (x0, y0) to x1; used to re-integrate the final
// partial step once the event has been bracketed.
State rk4_partial(const Rhs& rhs, double x0, const State& y0, double x1,
                  int substeps = 64) {
  State y = y0;
  const double h = (x1 - x0) / substeps;
  double x = x0;
  for (int i = 0; i < substeps; ++i) {
    const State k1 = rhs(x, y);
    const State k2 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = rhs(x + h, axpy(y, h, k3));
    for (std::size_t j = 0; j < 6; ++j)
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    x += h;
  }
  return y;
}

// Bisect for the x where component `comp` crosses zero inside (x_lo, x_hi],
// re-integrating the bracketing step each probe.
std::pair<double, State> refine_event(const Rhs& rhs, double x_lo,
                                      const State& y_lo, double x_hi,
                                      int comp, double sign_lo,
                                      double root_tol) {
  double lo = x_lo, hi = x_hi;
  while (hi - lo > root_tol) {
    const double mid = 0.5 * (lo + hi);
    const State y_mid = rk4_partial(rhs, x_lo, y_lo, mid);
    if (sign_lo * y_mid[comp] > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {root, rk4_partial(rhs, x_lo, y_lo, root)};
}

WellProfile run_shooting(const PotentialSpec& pot, double amplitude,
                         double tolerance) {
  if (!(tolerance > 0.0)) {
    throw std::domain_error("shoot_profile: tolerance must be > 0");
  }
  if (!(amplitude > 0.0)) {
    throw std::domain_error("shoot_profile: amplitude must be > 0");
  }
  const double drive0 = pot.derivative_fn(amplitude);
  if (!(drive0 > 0.0)) {
    throw no_zero_error(
        "profile cannot descend: the drive term does not pull Phi(0) = " +
        std::to_string(amplitude) + " toward the boundary value");
  }

  const double rtol = tolerance * 1e-2;  // 1e-10 at the default tolerance
  const double atol = rtol * 1e-2;
  const Rhs rhs{pot};

  // Two-term series start: Phi = a - f(a) x^2/6 keeps the (2/x) Phi'
  // term regular; the integrals pick up their leading x^3 (x^5) pieces.
  const double xs = kSeriesStart;
  State y;
  y[0] = amplitude - drive0 * xs * xs / 6.0;
  y[1] = -drive0 * xs / 3.0;
  const double a2 = amplitude * amplitude;
  y[2] = (1.0 - a2 * a2) * xs * xs * xs / 3.0;
  y[3] = (drive0 / 3.0) * (drive0 / 3.0) * std::pow(xs, 5) / 5.0;
  y[4] = drive0 * amplitude * xs * xs * xs / 3.0;
  y[5] = pot.potential_fn(amplitude) * xs * xs * xs / 3.0 + 0.5 * y[3];

  WellProfile profile;
  profile.amplitude = amplitude;
  profile.tolerance = tolerance;
  profile.samples.push_back({xs, y[0], y[1]});

  double x = xs;
  double h = 1e-3;
  State k1 = rhs(x, y);
  bool event_found = false;
  double x_end = 0.0;
  State y_end{};

  while (x < kMaxRadius) {
    h = std::min({h, kMaxStep, kMaxRadius - x});
    const DopriStep step = dopri_step(rhs, x, y, h, k1, rtol, atol);
    if (step.error > 1.0) {
      h *= std::clamp(0.9 * std::pow(step.error, -0.2), 0.2, 1.0);
      continue;
    }

    if (step.y_new[0] <= 0.0) {
      // Phi crossed zero inside the step: locate the wall.
      std::tie(x_end, y_end) =
          refine_event(rhs, x, y, x + h, /*comp=*/0, /*sign_lo=*/+1.0,
                       tolerance);
      event_found = true;
      break;
    }
    if (y[1] < 0.0 && step.y_new[1] >= 0.0) {
      // Descent stalled (Phi' crossed zero from below): the central
      // minimum blocks an exact zero, truncate at the stationary point.
      std::tie(x_end, y_end) =
          refine_event(rhs, x, y, x + h, /*comp=*/1, /*sign_lo=*/-1.0,
                       tolerance);
      event_found = true;
      break;
    }

    x += h;
    y = step.y_new;
    k1 = step.k_last;
    profile.samples.push_back({x, y[0], y[1]});
    h *= std::clamp(0.9 * std::pow(std::max(step.error, 1e-10), -0.2), 0.2, 5.0);
  }

  if (!event_found) {
    throw no_zero_error("no zero of Phi found up to x = " +
                        std::to_string(kMaxRadius) + " for amplitude " +
                        std::to_string(amplitude));
  }

  profile.samples.push_back({x_end, y_end[0], y_end[1]});
  profile.first_zero = x_end;
  profile.terminal_phi = std::max(y_end[0], 0.0);
  profile.quartic_integral = y_end[2];
  profile.grad_integral = y_end[3];
  profile.drive_integral = y_end[4];
  profile.energy_integral = y_end[5];
  profile.energy_factor = x_end * y_end[2];
  profile.classical_energy_factor = x_end * y_end[5];
  profile.virial_residual =
      std::abs(y_end[3] - y_end[4]) / std::abs(y_end[3]);
  return profile;
}

}  // namespace

PotentialSpec PotentialSpec::double_well() {
  PotentialSpec spec;
  spec.derivative_fn = [](double phi) { return phi * (1.0 - phi * phi); };
  spec.potential_fn = [](double phi) {
    const double w = phi * phi - 1.0;
    return 0.25 * w * w;
  };
  spec.well_count = 2;
  spec.label = "double_well";
  return spec;
}

PotentialSpec PotentialSpec::three_well(double curvature) {
  if (!(curvature > 0.0)) {
    throw std::domain_error("three_well: curvature must be > 0");
  }
  PotentialSpec spec;
  spec.derivative_fn = [curvature](double phi) {
    const double p2 = phi * phi;
    return curvature * phi * (1.0 - p2) * (3.0 * p2 - 1.0);
  };
  spec.potential_fn = [curvature](double phi) {
    const double p2 = phi * phi;
    const double w = p2 - 1.0;
    return 0.5 * curvature * p2 * w * w;
  };
  spec.well_count = 3;
  spec.label = "three_well";
  return spec;
}

WellProfile shoot_profile(double amplitude, double tolerance) {
  if (!(amplitude > 0.0)) {
    throw std::domain_error("shoot_profile: amplitude must be in (0, 1)");
  }
  if (amplitude >= 1.0) {
    // Phi(0) = 1 is the constant solution; Phi(0) > 1 grows monotonically.
    throw no_zero_error("amplitude >= 1: the profile never reaches zero");
  }
  static const PotentialSpec dw = PotentialSpec::double_well();
  return run_shooting(dw, amplitude, tolerance);
}

WellProfile multiwell_profile(const PotentialSpec& potential, double amplitude,
                              double tolerance) {
  if (!potential.derivative_fn || !potential.potential_fn) {
    throw std::domain_error("multiwell_profile: potential callbacks missing");
  }
  return run_shooting(potential, amplitude, tolerance);
}

double energy_factor(double amplitude) {
  return shoot_profile(amplitude).energy_factor;
}

double virial_check(const WellProfile& profile) {
  if (!(std::abs(profile.grad_integral) > 0.0)) {
    throw std::domain_error("virial_check: profile has no gradient integral");
  }
  return std::abs(profile.grad_integral - profile.drive_integral) /
         std::abs(profile.grad_integral);
}

double energy_form_residual(const WellProfile& profile) {
  const double quartic_form = 0.25 * profile.quartic_integral;
  if (!(std::abs(quartic_form) > 0.0)) {
    throw std::domain_error("energy_form_residual: empty quartic integral");
  }
  return std::abs(profile.energy_integral - quartic_form) /
         std::abs(quartic_form);
}

namespace {

double anchored_exponent(const WellProfile& profile) {
  return std::log(3.0 * profile.quartic_integral) /
         std::log(profile.first_zero);
}

}  // namespace

double scaling_exponent(double amplitude, double step) {
  if (!(step > 0.0) || !(amplitude - step > 0.0) || !(amplitude + step < 1.0)) {
    throw std::domain_error(
        "scaling_exponent: amplitude +- step must stay inside (0, 1)");
  }
  const WellProfile lo = shoot_profile(amplitude - step);
  const WellProfile hi = shoot_profile(amplitude + step);
  return 0.5 * (anchored_exponent(lo) + anchored_exponent(hi));
}

WallFloor wall_energy_floor(double energy_factor, double exponent) {
  if (!(exponent > 0.0)) {
    throw std::domain_error("wall_energy_floor: exponent must be > 0");
  }
  WallFloor floor;
  floor.suction_coeff = exponent / (4.0 * std::numbers::pi);
  floor.total_energy_factor = (1.0 + exponent / 2.0) * energy_factor;
  return floor;
}

double bound_coefficient(double amplitude) {
  const double n = scaling_exponent(amplitude);
  const double f = energy_factor(amplitude);
  return 2.0 * std::numbers::pi * (1.0 + n / 2.0) * f / 4.0;
}

double reference_bound_coefficient() {
  static const double value = [] {
    const double f = energy_factor(kReferenceAmplitude);
    return 2.0 * std::numbers::pi *
           (1.0 + kAsymptoticScalingExponent / 2.0) * f / 4.0;
  }();
  return value;
}

double critical_coupling(double entropy_nats) {
  if (!(entropy_nats > 0.0)) {
    throw std::domain_error("critical_coupling: entropy must be > 0");
  }
  return reference_bound_coefficient() / entropy_nats;
}

CouplingRegime coupling_regime(double lambda, double entropy_nats) {
  return lambda > critical_coupling(entropy_nats) ? CouplingRegime::strong
                                                  : CouplingRegime::weak;
}

void write_profile_csv(const WellProfile& profile, std::ostream& out) {
  out << "x,phi,dphi\n";
  char row[96];
  for (const ProfileSample& s : profile.samples) {
    std::snprintf(row, sizeof(row), "%.12g,%.12g,%.12g\n", s.x, s.phi, s.dphi);
    out << row;
  }
}

}  // namespace entrobound
