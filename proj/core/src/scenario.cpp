#include "entrobound/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "entrobound/bound.hpp"
#include "entrobound/conductor.hpp"
#include "entrobound/counting.hpp"
#include "entrobound/doublewell.hpp"
#include "entrobound/twolevel.hpp"

namespace entrobound {

namespace {

struct SchemaEntry {
  std::string key;
  bool required = true;
  std::string default_value;
};

const std::vector<SchemaEntry>& schema_for(Scenario scenario) {
  static const std::vector<SchemaEntry> mass = {
      {"n_particles"}, {"compton_ratio"}, {"kappa", false, "0.5"}};
  static const std::vector<SchemaEntry> two_level = {
      {"rho0"}, {"rho_gap"}, {"degeneracy"}, {"y"}};
  static const std::vector<SchemaEntry> onion = {
      {"n_shells"},      {"outer_radius"},
      {"thickness"},     {"density"},
      {"charge_sq"},     {"mass"},
      {"relaxation_time", false, "1"}, {"mechanism", false, "plasma"}};
  static const std::vector<SchemaEntry> coax = {
      {"cable_length"},  {"sphere_radius"},
      {"inner_radius"},  {"outer_radius"},
      {"density"},       {"charge_sq"},
      {"mass"},          {"relaxation_time", false, "1"},
      {"mode", false, "three_state"}};
  static const std::vector<SchemaEntry> doublewell = {
      {"amplitude"},
      {"lambda"},
      {"entropy_nats", false, "0.69314718055994531"},
      {"tolerance", false, "1e-8"}};
  static const std::vector<SchemaEntry> multiwell = {
      {"amplitude"},
      {"lambda"},
      {"wells", false, "3"},
      {"curvature", false, "1"},
      {"entropy_nats", false, "1.0986122886681098"},
      {"tolerance", false, "1e-8"}};
  static const std::vector<SchemaEntry> species = {
      {"g_per_species"}, {"rho_gap"}, {"model"}, {"coefficient"},
      {"max_species"}};
  switch (scenario) {
    case Scenario::mass: return mass;
    case Scenario::two_level: return two_level;
    case Scenario::onion: return onion;
    case Scenario::coax: return coax;
    case Scenario::doublewell: return doublewell;
    case Scenario::multiwell: return multiwell;
    case Scenario::species_sweep: return species;
  }
  throw std::logic_error("unreachable");
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

/// Parameter lookup with schema defaults already merged in.
class Params {
 public:
  Params(const ScenarioConfig& config)
      : scenario_(config.scenario), values_(config.parameters) {
    for (const SchemaEntry& entry : schema_for(scenario_)) {
      if (!values_.count(entry.key)) {
        if (entry.required) {
          throw config_error("scenario '" + scenario_name(scenario_) +
                             "': missing required parameter '" + entry.key +
                             "'");
        }
        values_[entry.key] = entry.default_value;
      }
    }
    for (const auto& [key, value] : values_) {
      const auto& schema = schema_for(scenario_);
      const bool known =
          std::any_of(schema.begin(), schema.end(),
                      [&key](const SchemaEntry& e) { return e.key == key; });
      if (!known) {
        throw config_error("scenario '" + scenario_name(scenario_) +
                           "': unknown parameter '" + key + "'");
      }
    }
  }

  double real(const std::string& key) const {
    const std::string& text = values_.at(key);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
      throw config_error("parameter '" + key + "': '" + text +
                         "' is not a number");
    }
    return v;
  }

  std::int64_t integer(const std::string& key) const {
    const double v = real(key);
    const double rounded = std::nearbyint(v);
    if (std::abs(v - rounded) > 1e-9 * std::max(1.0, std::abs(v))) {
      throw config_error("parameter '" + key + "': expected an integer");
    }
    return static_cast<std::int64_t>(rounded);
  }

  const std::string& text(const std::string& key) const {
    return values_.at(key);
  }

 private:
  Scenario scenario_;
  std::map<std::string, std::string> values_;
};

CarrierSpec carrier_from(const Params& p) {
  CarrierSpec carrier;
  carrier.density = p.real("density");
  carrier.charge_sq = p.real("charge_sq");
  carrier.mass = p.real("mass");
  carrier.relaxation_time = p.real("relaxation_time");
  return carrier;
}

ReportRow row_from(const BoundReport& report) {
  ReportRow row;
  row.scenario_label = report.scenario_label;
  row.entropy_nats = report.entropy_nats;
  row.bound_value = report.bound_value;
  row.margin = report.margin;
  row.satisfied = report.satisfied;
  return row;
}

ReportRow run_mass(const Params& p) {
  MassBoundSpec spec;
  spec.n_particles = p.integer("n_particles");
  spec.compton_ratio = p.real("compton_ratio");
  spec.momentum_fraction = p.real("kappa");
  const MassBoundReport report = mass_bound_report(spec);
  ReportRow row = row_from(report.bound);
  row.diagnostics = {
      {"derived_modes", static_cast<double>(report.derived_modes)},
      {"stirling_cap", report.stirling_cap}};
  return row;
}

ReportRow run_two_level(const Params& p) {
  TwoLevelSystem sys;
  sys.rho0 = p.real("rho0");
  sys.rho_gap = p.real("rho_gap");
  sys.degeneracy = p.integer("degeneracy");
  sys.y = p.real("y");
  const double entropy = canonical_entropy(sys);
  const double energy_radius = mean_energy_radius(sys);
  ReportRow row = row_from(evaluate_bound(entropy, energy_radius, "two_level"));
  const XiMaximum peak = xi_maximum(sys);
  row.diagnostics = {
      {"xi", xi(sys)},
      {"y_star", peak.y_star},
      {"xi_star", peak.xi_star},
      {"critical_degeneracy", critical_degeneracy(sys.rho_gap, sys.rho0)}};
  return row;
}

Mechanism mechanism_from(const std::string& name) {
  if (name == "plasma") return Mechanism::plasma;
  if (name == "skin") return Mechanism::skin;
  throw config_error("mechanism must be 'plasma' or 'skin', got '" + name +
                     "'");
}

ReportRow run_onion(const Params& p) {
  OnionScene scene;
  scene.n_shells = p.integer("n_shells");
  scene.outer_radius = p.real("outer_radius");
  scene.partition_thickness = p.real("thickness");
  scene.carrier = carrier_from(p);
  const Mechanism mechanism = mechanism_from(p.text("mechanism"));
  const OnionReport report = onion_report(scene, mechanism);
  ReportRow row = row_from(report.bound);
  row.diagnostics = {
      {"carrier_energy", report.carrier_energy},
      {"analytic_floor", report.analytic_floor},
      {"min_density",
       minimal_confining_density(scene.carrier.mass, scene.carrier.charge_sq,
                                 scene.partition_thickness, mechanism)},
      {"omega_p", plasma_frequency(scene.carrier)},
      {"skin_depth_floor", skin_depth_floor(scene.carrier)}};
  return row;
}

CoaxMode coax_mode_from(const std::string& name) {
  if (name == "three_state") return CoaxMode::three_state;
  if (name == "multimode") return CoaxMode::multimode;
  throw config_error("mode must be 'three_state' or 'multimode', got '" +
                     name + "'");
}

ReportRow run_coax(const Params& p) {
  CoaxScene scene;
  scene.cable_length = p.real("cable_length");
  scene.sphere_radius = p.real("sphere_radius");
  scene.inner_radius = p.real("inner_radius");
  scene.outer_radius = p.real("outer_radius");
  scene.carrier = carrier_from(p);
  const CoaxMode mode = coax_mode_from(p.text("mode"));
  const CoaxReport report = coax_report(scene, mode);
  ReportRow row = row_from(report.bound);
  row.diagnostics = {{"carrier_energy", report.carrier_energy},
                     {"analytic_floor", report.analytic_floor},
                     {"entropy_cap", report.entropy_cap},
                     {"omega_p", plasma_frequency(scene.carrier)}};
  return row;
}

ReportRow run_doublewell(const Params& p) {
  const double amplitude = p.real("amplitude");
  const double lambda = p.real("lambda");
  const double entropy = p.real("entropy_nats");
  const double tolerance = p.real("tolerance");
  if (!(lambda > 0.0)) throw config_error("lambda must be > 0");

  const WellProfile profile = shoot_profile(amplitude, tolerance);
  const double step =
      std::min({0.005, amplitude / 2.0, (1.0 - amplitude) / 2.0});
  const double exponent = scaling_exponent(amplitude, step);
  const WallFloor floor = wall_energy_floor(profile.energy_factor, exponent);
  const double coefficient =
      2.0 * std::numbers::pi * floor.total_energy_factor / 4.0;
  const double lambda_crit = critical_coupling(entropy);

  ReportRow row = row_from(evaluate_bound(
      entropy, floor.total_energy_factor / (4.0 * lambda), "doublewell"));
  if (coupling_regime(lambda, entropy) == CouplingRegime::strong) {
    // Quartic theory is trivial at strong coupling: flag the regime
    // instead of claiming a clean violation.
    row.status = "strong_coupling";
  }
  row.diagnostics = {{"x0", profile.first_zero},
                     {"energy_factor", profile.energy_factor},
                     {"exponent", exponent},
                     {"coefficient", coefficient},
                     {"lambda_crit", lambda_crit},
                     {"virial_residual", profile.virial_residual}};
  return row;
}

ReportRow run_multiwell(const Params& p) {
  if (p.integer("wells") != 3) {
    throw config_error("multiwell: only the three-well potential is built in");
  }
  const double amplitude = p.real("amplitude");
  const double lambda = p.real("lambda");
  const double entropy = p.real("entropy_nats");
  const double tolerance = p.real("tolerance");
  if (!(lambda > 0.0)) throw config_error("lambda must be > 0");

  const PotentialSpec potential = PotentialSpec::three_well(p.real("curvature"));
  const WellProfile profile = multiwell_profile(potential, amplitude, tolerance);
  // Equal mixture of the central vacuum and the two side-well states:
  // E = (2/3)(eps_c + eps_w) with the wall floor at the asymptotic exponent.
  const double mixture_factor =
      (2.0 / 3.0) * (1.0 + kAsymptoticScalingExponent / 2.0) *
      profile.classical_energy_factor;

  ReportRow row = row_from(
      evaluate_bound(entropy, mixture_factor / (2.0 * std::numbers::pi * lambda),
                     "multiwell"));
  row.diagnostics = {
      {"x0", profile.first_zero},
      {"classical_energy_factor", profile.classical_energy_factor},
      {"mixture_factor", mixture_factor},
      {"terminal_phi", profile.terminal_phi},
      {"virial_residual", profile.virial_residual}};
  return row;
}

ReportRow run_species_sweep(const Params& p) {
  const std::int64_t g_per = p.integer("g_per_species");
  const double rho_gap = p.real("rho_gap");
  const std::int64_t max_species = p.integer("max_species");
  SpeciesModel model;
  const std::string& kind = p.text("model");
  if (kind == "constant") {
    model.kind = SpeciesModel::Kind::constant;
  } else if (kind == "linear") {
    model.kind = SpeciesModel::Kind::linear_in_species;
  } else {
    throw config_error("model must be 'constant' or 'linear', got '" + kind +
                       "'");
  }
  model.coefficient = p.real("coefficient");

  const auto violating = species_sweep(g_per, rho_gap, model, max_species);
  const std::int64_t probe = violating.value_or(max_species);

  ReportRow row;
  if (probe >= 1) {
    TwoLevelSystem sys;
    sys.rho_gap = rho_gap;
    sys.degeneracy = probe * g_per;
    sys.rho0 = model.kind == SpeciesModel::Kind::constant
                   ? model.coefficient
                   : model.coefficient * static_cast<double>(probe);
    sys.y = 2.0 * std::numbers::pi * rho_gap;  // the optimum temperature
    row = row_from(evaluate_bound(canonical_entropy(sys),
                                  mean_energy_radius(sys), "species_sweep"));
    row.diagnostics = {
        {"violating_species",
         static_cast<double>(violating.value_or(0))},
        {"xi_star",
         xi_star_value(static_cast<double>(sys.degeneracy), rho_gap, sys.rho0)}};
  } else {
    // Empty sweep: nothing examined, nothing violated.
    row = row_from(evaluate_bound(0.0, 0.0, "species_sweep"));
    row.diagnostics = {{"violating_species", 0.0},
                       {"xi_star", -std::numeric_limits<double>::infinity()}};
  }
  return row;
}

ReportRow dispatch(const ScenarioConfig& config) {
  const Params p(config);
  switch (config.scenario) {
    case Scenario::mass: return run_mass(p);
    case Scenario::two_level: return run_two_level(p);
    case Scenario::onion: return run_onion(p);
    case Scenario::coax: return run_coax(p);
    case Scenario::doublewell: return run_doublewell(p);
    case Scenario::multiwell: return run_multiwell(p);
    case Scenario::species_sweep: return run_species_sweep(p);
  }
  throw std::logic_error("unreachable");
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool is_meta_key(const std::string& key) {
  return key == "seed" || key == "sweep" || key == "sweep_start" ||
         key == "sweep_stop" || key == "sweep_count" || key == "sweep_scale";
}

void set_meta(ScenarioConfig& config, const std::string& key,
              const std::string& value) {
  auto as_real = [&](const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') {
      throw config_error("meta key '" + key + "': '" + v +
                         "' is not a number");
    }
    return x;
  };
  auto sweep = [&]() -> SweepSpec& {
    if (!config.sweep) config.sweep.emplace();
    return *config.sweep;
  };
  if (key == "seed") {
    config.seed = static_cast<std::uint64_t>(as_real(value));
  } else if (key == "sweep") {
    sweep().parameter = value;
  } else if (key == "sweep_start") {
    sweep().start = as_real(value);
  } else if (key == "sweep_stop") {
    sweep().stop = as_real(value);
  } else if (key == "sweep_count") {
    sweep().count = static_cast<std::int64_t>(as_real(value));
  } else if (key == "sweep_scale") {
    if (value == "linear") {
      sweep().scale = SweepSpec::Scale::linear;
    } else if (value == "log") {
      sweep().scale = SweepSpec::Scale::log;
    } else {
      throw config_error("sweep_scale must be 'linear' or 'log'");
    }
  }
}

ScenarioConfig parse_flat_config(const std::string& text) {
  ScenarioConfig config;
  bool scenario_seen = false;
  std::istringstream stream(text);
  std::string raw;
  while (std::getline(stream, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw config_error("malformed scenario header: " + line);
      }
      if (scenario_seen) {
        throw config_error("config must contain exactly one [scenario] header");
      }
      config.scenario = scenario_from_name(trim(line.substr(1, line.size() - 2)));
      scenario_seen = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error("expected 'key = value', got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw config_error("expected 'key = value', got: " + line);
    }
    if (is_meta_key(key)) {
      set_meta(config, key, value);
    } else {
      config.parameters[key] = value;
    }
  }
  if (!scenario_seen) {
    throw config_error("config is missing its [scenario] header");
  }
  return config;
}

ScenarioConfig parse_json_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw config_error(std::string("invalid JSON config: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("scenario")) {
    throw config_error("JSON config must be an object with a 'scenario' key");
  }
  ScenarioConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "scenario") {
      config.scenario = scenario_from_name(value.get<std::string>());
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "parameters") {
      for (const auto& [pkey, pvalue] : value.items()) {
        if (pvalue.is_string()) {
          config.parameters[pkey] = pvalue.get<std::string>();
        } else if (pvalue.is_number()) {
          config.parameters[pkey] = format_real(pvalue.get<double>());
        } else {
          throw config_error("parameter '" + pkey +
                             "' must be a number or string");
        }
      }
    } else if (key == "sweep") {
      SweepSpec sweep;
      sweep.parameter = value.at("parameter").get<std::string>();
      sweep.start = value.at("start").get<double>();
      sweep.stop = value.at("stop").get<double>();
      sweep.count = value.at("count").get<std::int64_t>();
      const std::string scale = value.value("scale", "linear");
      if (scale == "log") {
        sweep.scale = SweepSpec::Scale::log;
      } else if (scale == "linear") {
        sweep.scale = SweepSpec::Scale::linear;
      } else {
        throw config_error("sweep scale must be 'linear' or 'log'");
      }
      config.sweep = sweep;
    } else {
      throw config_error("unknown top-level config key '" + key + "'");
    }
  }
  return config;
}

std::vector<double> sweep_values(const SweepSpec& sweep) {
  if (sweep.count < 0) {
    throw config_error("sweep count must be >= 0");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(sweep.count));
  if (sweep.count == 0) return values;
  if (sweep.count == 1) {
    values.push_back(sweep.start);
    return values;
  }
  if (sweep.scale == SweepSpec::Scale::log &&
      (!(sweep.start > 0.0) || !(sweep.stop > 0.0))) {
    throw config_error("log sweeps need positive start and stop");
  }
  for (std::int64_t i = 0; i < sweep.count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(sweep.count - 1);
    if (sweep.scale == SweepSpec::Scale::linear) {
      values.push_back(sweep.start + t * (sweep.stop - sweep.start));
    } else {
      values.push_back(std::exp(std::log(sweep.start) +
                                t * (std::log(sweep.stop) - std::log(sweep.start))));
    }
  }
  return values;
}

std::string format12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format12(v);
}

}  // namespace

Scenario scenario_from_name(const std::string& name) {
  if (name == "mass") return Scenario::mass;
  if (name == "two_level") return Scenario::two_level;
  if (name == "onion") return Scenario::onion;
  if (name == "coax") return Scenario::coax;
  if (name == "doublewell") return Scenario::doublewell;
  if (name == "multiwell") return Scenario::multiwell;
  if (name == "species_sweep") return Scenario::species_sweep;
  throw config_error("unknown scenario '" + name + "'");
}

std::string scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::mass: return "mass";
    case Scenario::two_level: return "two_level";
    case Scenario::onion: return "onion";
    case Scenario::coax: return "coax";
    case Scenario::doublewell: return "doublewell";
    case Scenario::multiwell: return "multiwell";
    case Scenario::species_sweep: return "species_sweep";
  }
  throw std::logic_error("unreachable");
}

ScenarioConfig parse_config(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_json_config(text);
  }
  return parse_flat_config(text);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void apply_override(ScenarioConfig& config, const std::string& key_value) {
  const auto eq = key_value.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw config_error("--set expects key=value, got '" + key_value + "'");
  }
  const std::string key = trim(key_value.substr(0, eq));
  const std::string value = trim(key_value.substr(eq + 1));
  if (is_meta_key(key)) {
    set_meta(config, key, value);
  } else {
    config.parameters[key] = value;
  }
}

std::vector<ReportRow> run_scenario(const ScenarioConfig& config) {
  std::vector<ReportRow> rows;
  if (!config.sweep) {
    rows.push_back(dispatch(config));
    return rows;
  }

  const SweepSpec& sweep = *config.sweep;
  const auto& schema = schema_for(config.scenario);
  if (!std::any_of(schema.begin(), schema.end(), [&](const SchemaEntry& e) {
        return e.key == sweep.parameter;
      })) {
    throw config_error("sweep parameter '" + sweep.parameter +
                       "' is not a parameter of scenario '" +
                       scenario_name(config.scenario) + "'");
  }

  for (double value : sweep_values(sweep)) {
    ScenarioConfig point = config;
    point.sweep.reset();
    point.parameters[sweep.parameter] = format_real(value);
    ReportRow row;
    try {
      row = dispatch(point);
    } catch (const std::exception& err) {
      row.scenario_label = scenario_name(config.scenario);
      row.entropy_nats = std::numeric_limits<double>::quiet_NaN();
      row.bound_value = std::numeric_limits<double>::quiet_NaN();
      row.margin = std::numeric_limits<double>::quiet_NaN();
      row.satisfied = false;
      row.status = std::string("error: ") + err.what();
    }
    row.swept_parameter = sweep.parameter;
    row.swept_value = value;
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const std::vector<ReportRow>& rows, EmitFormat format,
          std::ostream& out) {
  // Diagnostic column set: union over rows, first-seen order.
  std::vector<std::string> diag_keys;
  for (const ReportRow& row : rows) {
    for (const auto& [key, value] : row.diagnostics) {
      if (std::find(diag_keys.begin(), diag_keys.end(), key) ==
          diag_keys.end()) {
        diag_keys.push_back(key);
      }
    }
  }

  if (format == EmitFormat::csv) {
    out << "scenario,swept_parameter,swept_value,entropy_nats,bound_value,"
           "margin,satisfied,status";
    for (const std::string& key : diag_keys) out << ',' << csv_escape(key);
    out << '\n';
    for (const ReportRow& row : rows) {
      out << csv_escape(row.scenario_label) << ','
          << csv_escape(row.swept_parameter) << ','
          << (row.swept_value ? format12(*row.swept_value) : std::string())
          << ',' << format12(row.entropy_nats) << ','
          << format12(row.bound_value) << ',' << format12(row.margin) << ','
          << (row.satisfied ? "true" : "false") << ','
          << csv_escape(row.status);
      for (const std::string& key : diag_keys) {
        out << ',';
        const auto it =
            std::find_if(row.diagnostics.begin(), row.diagnostics.end(),
                         [&](const auto& kv) { return kv.first == key; });
        if (it != row.diagnostics.end()) out << format12(it->second);
      }
      out << '\n';
    }
    return;
  }

  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ReportRow& row = rows[i];
    out << "  {\"scenario\":\"" << json_escape(row.scenario_label) << "\","
        << "\"swept_parameter\":"
        << (row.swept_parameter.empty()
                ? std::string("null")
                : "\"" + json_escape(row.swept_parameter) + "\"")
        << ",\"swept_value\":"
        << (row.swept_value ? json_number(*row.swept_value)
                            : std::string("null"))
        << ",\"entropy_nats\":" << json_number(row.entropy_nats)
        << ",\"bound_value\":" << json_number(row.bound_value)
        << ",\"margin\":" << json_number(row.margin)
        << ",\"satisfied\":" << (row.satisfied ? "true" : "false")
        << ",\"status\":\"" << json_escape(row.status) << "\""
        << ",\"diagnostics\":{";
    for (std::size_t d = 0; d < row.diagnostics.size(); ++d) {
      if (d > 0) out << ',';
      out << "\"" << json_escape(row.diagnostics[d].first)
          << "\":" << json_number(row.diagnostics[d].second);
    }
    out << "}}" << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  out << "]\n";
}

int exit_code_for(const std::vector<ReportRow>& rows) {
  bool any_error = false;
  bool any_violation = false;
  for (const ReportRow& row : rows) {
    if (row.status.rfind("error", 0) == 0) {
      any_error = true;
    } else if (!row.satisfied) {
      any_violation = true;
    }
  }
  if (any_violation) return 2;
  if (any_error) return 1;
  return 0;
}

}  // namespace entrobound
