#include "entrobound/bound.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace entrobound {

BoundReport evaluate_bound(double entropy_nats, double energy_radius_product,
                           std::string label) {
  if (!(entropy_nats >= 0.0)) {
    throw std::domain_error("evaluate_bound: entropy must be >= 0, got " +
                            std::to_string(entropy_nats));
  }
  if (!(energy_radius_product >= 0.0)) {
    throw std::domain_error(
        "evaluate_bound: energy-radius product must be >= 0, got " +
        std::to_string(energy_radius_product));
  }
  BoundReport report;
  report.entropy_nats = entropy_nats;
  report.bound_value = 2.0 * std::numbers::pi * energy_radius_product;
  report.margin = report.bound_value - report.entropy_nats;
  report.satisfied = report.margin >= 0.0;
  report.scenario_label = std::move(label);
  return report;
}

}  // namespace entrobound
