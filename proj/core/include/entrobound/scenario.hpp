#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Scenario configuration, dispatch and report emission backing the
// command-line driver.  A configuration names one scenario, its parameters,
// and optionally a one-parameter sweep.

namespace entrobound {

/// Malformed configuration or command line (maps to exit code 1).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario {
  mass,
  two_level,
  onion,
  coax,
  doublewell,
  multiwell,
  species_sweep,
};

Scenario scenario_from_name(const std::string& name);
std::string scenario_name(Scenario scenario);

struct SweepSpec {
  enum class Scale { linear, log };
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  std::int64_t count = 0;
  Scale scale = Scale::linear;
};

struct ScenarioConfig {
  Scenario scenario = Scenario::mass;
  /// Raw key -> value strings; numeric parameters are parsed on use so a
  /// single representation covers reals, integers and enum names.
  std::map<std::string, std::string> parameters;
  std::optional<SweepSpec> sweep;
  std::uint64_t seed = 1;
};

/// One output row.  diagnostics is an ordered list so emitted columns are
/// stable for a given scenario.
struct ReportRow {
  std::string scenario_label;
  std::string swept_parameter;          ///< empty when not sweeping
  std::optional<double> swept_value;
  double entropy_nats = 0.0;
  double bound_value = 0.0;
  double margin = 0.0;
  bool satisfied = false;
  std::string status = "ok";  ///< "ok", "strong_coupling" or "error: ..."
  std::vector<std::pair<std::string, double>> diagnostics;
};

/// Parse a configuration from flat key = value text with one [scenario]
/// header, or from the equivalent JSON object (autodetected by a leading
/// '{').  Unknown keys and missing required keys raise config_error.
ScenarioConfig parse_config(const std::string& text);

/// Read and parse a configuration file.
ScenarioConfig load_config(const std::string& path);

/// Apply "key=value" overrides (parameters or the meta keys seed,
/// sweep, sweep_start, sweep_stop, sweep_count, sweep_scale).
void apply_override(ScenarioConfig& config, const std::string& key_value);

/// Run the scenario: one row per sweep point, or a single row.  Module
/// errors become per-row "error: ..." statuses when sweeping and propagate
/// as exceptions when single-shot.
std::vector<ReportRow> run_scenario(const ScenarioConfig& config);

enum class EmitFormat { csv, json };

/// Serialize rows with 12 significant digits.  CSV: fixed header then one
/// line per row; JSON: array of objects with identical keys.
void emit(const std::vector<ReportRow>& rows, EmitFormat format,
          std::ostream& out);

/// Exit code summarising a run: 2 if any row reports a violation,
/// 1 if any row errored, 0 otherwise.
int exit_code_for(const std::vector<ReportRow>& rows);

}  // namespace entrobound
