#include "golden_suite.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "entrobound/bound.hpp"
#include "entrobound/conductor.hpp"
#include "entrobound/counting.hpp"
#include "entrobound/doublewell.hpp"
#include "entrobound/sampling.hpp"
#include "entrobound/twolevel.hpp"

namespace entrobound::golden {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& id, bool ok, const std::string& detail) {
    out << (ok ? "PASS" : "FAIL") << ' ' << id << ": " << detail << '\n';
    if (!ok) ++failures;
  }
};

bool within(double value, double expected, double tol) {
  return std::abs(value - expected) <= tol;
}

void run_ratio_maximum(const json& spec, Reporter& report) {
  const RatioMaximum peak = maximize_ratio();
  const bool ok =
      within(peak.nbar_star, spec["expected"]["nbar_star"].get<double>(),
             spec["tolerance"]["nbar_star"].get<double>()) &&
      within(peak.f_star, spec["expected"]["f_star"].get<double>(),
             spec["tolerance"]["f_star"].get<double>());
  report.check(spec["id"], ok,
               "nbar*=" + num(peak.nbar_star) + " f*=" + num(peak.f_star));
}

void run_critical_degeneracy(const json& spec, Reporter& report) {
  const double value = critical_degeneracy(0.0, 2.0);
  const bool ok = within(value, spec["expected"].get<double>(),
                         spec["tolerance"].get<double>());
  report.check(spec["id"], ok, "g_crit=" + num(value));
}

void run_xi_agreement(const json& spec, Reporter& report, std::uint64_t seed) {
  const int systems = spec["systems"].get<int>();
  const double y_tol = spec["y_tolerance"].get<double>();
  const double rel_tol = spec["identity_rel_tolerance"].get<double>();
  RandomEngine rng(seed);
  double worst_y = 0.0;
  double worst_rel = 0.0;
  for (int i = 0; i < systems; ++i) {
    TwoLevelSystem sys = sample_two_level_system(rng);
    const XiMaximum analytic = xi_maximum(sys);
    const XiMaximum numeric = xi_maximum_numeric(sys);
    worst_y = std::max(worst_y, std::abs(numeric.y_star - analytic.y_star));
    const double direct = canonical_entropy(sys) -
                          2.0 * std::numbers::pi * mean_energy_radius(sys);
    const double rel = std::abs(xi(sys) - direct) /
                       std::max(1.0, std::abs(direct));
    worst_rel = std::max(worst_rel, rel);
  }
  const bool ok = worst_y <= y_tol && worst_rel <= rel_tol;
  report.check(spec["id"], ok,
               "max |y_num - y_ana|=" + num(worst_y) +
                   " max identity rel err=" + num(worst_rel));
}

void run_profile(const json& spec, Reporter& report) {
  const WellProfile profile = shoot_profile(spec["amplitude"].get<double>());
  const bool ok =
      within(profile.first_zero, spec["expected"]["x0"].get<double>(),
             spec["tolerance"]["x0"].get<double>()) &&
      within(profile.energy_factor,
             spec["expected"]["energy_factor"].get<double>(),
             spec["tolerance"]["energy_factor"].get<double>());
  report.check(spec["id"], ok,
               "x0=" + num(profile.first_zero) +
                   " F=" + num(profile.energy_factor));
}

void run_scaling_exponent(const json& spec, Reporter& report) {
  const double value = scaling_exponent(spec["amplitude"].get<double>());
  const bool ok = within(value, spec["expected"].get<double>(),
                         spec["tolerance"].get<double>());
  report.check(spec["id"], ok, "n=" + num(value));
}

void run_bound_coefficient(const json& spec, Reporter& report) {
  const double value = reference_bound_coefficient();
  const bool ok = within(value, spec["expected"].get<double>(),
                         spec["tolerance"].get<double>());
  report.check(spec["id"], ok, "C0=" + num(value));
}

void run_critical_coupling(const json& spec, Reporter& report) {
  const double value = critical_coupling(spec["entropy_nats"].get<double>());
  const bool ok = within(value, spec["expected"].get<double>(),
                         spec["tolerance"].get<double>());
  report.check(spec["id"], ok, "lambda_crit=" + num(value));
}

void run_profile_grid(const json& spec, Reporter& report) {
  const int points = spec["grid_points"].get<int>();
  const double lo = spec["amplitude_lo"].get<double>();
  const double hi = spec["amplitude_hi"].get<double>();
  const double virial_max = spec["virial_residual_max"].get<double>();
  double worst_virial = 0.0;
  bool monotone = true;
  double prev_x0 = 0.0;
  double prev_f = 0.0;
  for (int i = 0; i < points; ++i) {
    const double a = lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(points - 1);
    const WellProfile profile = shoot_profile(a);
    worst_virial = std::max(worst_virial, virial_check(profile));
    if (i > 0 && (profile.first_zero <= prev_x0 ||
                  profile.energy_factor <= prev_f)) {
      monotone = false;
    }
    prev_x0 = profile.first_zero;
    prev_f = profile.energy_factor;
  }
  const bool ok = worst_virial < virial_max && monotone;
  report.check(spec["id"], ok,
               "max virial residual=" + num(worst_virial) +
                   (monotone ? ", x0 and F strictly increasing"
                             : ", MONOTONICITY BROKEN"));
}

void run_onion_sweep(const json& spec, Reporter& report, std::uint64_t seed) {
  const int samples = spec["samples"].get<int>();
  RandomEngine rng(seed);
  int violations = 0;
  int floor_misses = 0;
  for (int i = 0; i < samples; ++i) {
    const Mechanism mechanism =
        (i % 2 == 0) ? Mechanism::plasma : Mechanism::skin;
    const OnionScene scene = sample_onion_scene(rng, mechanism);
    const OnionReport onion = onion_report(scene, mechanism);
    if (!onion.bound.satisfied) ++violations;
    if (onion.bound.bound_value < onion.analytic_floor) ++floor_misses;
  }
  const bool ok = violations == 0 && floor_misses == 0;
  report.check(spec["id"], ok,
               std::to_string(samples) + " scenes, violations=" +
                   std::to_string(violations) +
                   " floor misses=" + std::to_string(floor_misses));
}

void run_coax_sweep(const json& spec, Reporter& report, std::uint64_t seed) {
  const int samples = spec["samples"].get<int>();
  RandomEngine rng(seed);
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    const CoaxScene scene = sample_coax_scene(rng);
    const CoaxMode mode =
        (i % 2 == 0) ? CoaxMode::three_state : CoaxMode::multimode;
    if (!coax_report(scene, mode).bound.satisfied) ++violations;
  }
  report.check(spec["id"], violations == 0,
               std::to_string(samples) + " scenes, violations=" +
                   std::to_string(violations));
}

void run_mass_sweep(const json& spec, Reporter& report, std::uint64_t seed) {
  const int samples = spec["samples"].get<int>();
  const auto extent = spec["grid_extent"].get<std::int64_t>();
  const double slack = spec["cap_slack"].get<double>();
  RandomEngine rng(seed);
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    if (!mass_bound_report(sample_mass_bound_spec(rng)).bound.satisfied) {
      ++violations;
    }
  }
  static const RatioMaximum peak = maximize_ratio();
  int cap_misses = 0;
  int discrepancy_misses = 0;
  for (std::int64_t n = 1; n <= extent; ++n) {
    for (std::int64_t omega = 1; omega <= extent; ++omega) {
      const double exact =
          exact_log_count({n, omega, Statistics::boson});
      const double cap = peak.f_star *
                         std::pow(static_cast<double>(n), 2.0 / 3.0) *
                         std::pow(static_cast<double>(omega), 1.0 / 3.0);
      if (exact > cap * (1.0 + slack)) ++cap_misses;
      const double stirling = stirling_entropy(n, omega);
      const double allowance = std::log(static_cast<double>(n)) +
                               std::log(static_cast<double>(omega)) + 2.0;
      if (std::abs(stirling - exact) > allowance) ++discrepancy_misses;
    }
  }
  const bool ok = violations == 0 && cap_misses == 0 && discrepancy_misses == 0;
  report.check(spec["id"], ok,
               std::to_string(samples) + " specs, violations=" +
                   std::to_string(violations) + ", grid cap misses=" +
                   std::to_string(cap_misses) + ", discrepancy misses=" +
                   std::to_string(discrepancy_misses));
}

void run_three_well(const json& spec, Reporter& report) {
  const PotentialSpec potential =
      PotentialSpec::three_well(spec["curvature"].get<double>());
  const WellProfile profile =
      multiwell_profile(potential, spec["amplitude"].get<double>());
  const double expected = spec["expected"].get<double>();
  const double factor = spec["factor"].get<double>();
  const double value = profile.classical_energy_factor;
  const bool ok = value >= expected / factor && value <= expected * factor;
  report.check(spec["id"], ok,
               "energy factor=" + num(value) + " (order " + num(expected) +
                   ", factor " + num(factor) + ")");
}

}  // namespace

int run_suite(const std::string& data_path, std::uint64_t seed,
              std::ostream& out) {
  std::ifstream in(data_path);
  if (!in) {
    out << "FAIL golden: cannot open data file '" << data_path << "'\n";
    return 1;
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    out << "FAIL golden: invalid data file: " << err.what() << '\n';
    return 1;
  }

  Reporter report{out};
  for (const json& check : doc.at("checks")) {
    const std::string id = check.at("id").get<std::string>();
    try {
      if (id == "ratio_maximum") {
        run_ratio_maximum(check, report);
      } else if (id == "critical_degeneracy") {
        run_critical_degeneracy(check, report);
      } else if (id == "xi_maximum_agreement") {
        run_xi_agreement(check, report, seed);
      } else if (id == "profile_small_amplitude" || id == "profile_098") {
        run_profile(check, report);
      } else if (id == "scaling_exponent_098") {
        run_scaling_exponent(check, report);
      } else if (id == "bound_coefficient_reference") {
        run_bound_coefficient(check, report);
      } else if (id == "critical_coupling_ln2") {
        run_critical_coupling(check, report);
      } else if (id == "profile_grid") {
        run_profile_grid(check, report);
      } else if (id == "onion_sweep") {
        run_onion_sweep(check, report, seed);
      } else if (id == "coax_sweep") {
        run_coax_sweep(check, report, seed);
      } else if (id == "mass_sweep") {
        run_mass_sweep(check, report, seed);
      } else if (id == "three_well_energy") {
        run_three_well(check, report);
      } else {
        report.check(id, false, "unknown check id");
      }
    } catch (const std::exception& err) {
      report.check(id, false, std::string("exception: ") + err.what());
    }
  }

  out << (report.failures == 0 ? "all checks passed\n"
                               : std::to_string(report.failures) +
                                     " check(s) failed\n");
  return report.failures == 0 ? 0 : 1;
}

}  // namespace entrobound::golden
