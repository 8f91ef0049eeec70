#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrobound/doublewell.hpp"
#include "entrobound/scenario.hpp"
#include "golden_suite.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& format_name,
                const std::string& out_path,
                const std::vector<std::string>& overrides,
                const std::string& profile_out) {
  using namespace entrobound;

  ScenarioConfig config = load_config(config_path);
  for (const std::string& kv : overrides) apply_override(config, kv);

  const EmitFormat format =
      format_name == "json" ? EmitFormat::json : EmitFormat::csv;

  const std::vector<ReportRow> rows = run_scenario(config);

  if (!profile_out.empty()) {
    if (config.scenario != Scenario::doublewell &&
        config.scenario != Scenario::multiwell) {
      throw config_error("--profile-out applies to the doublewell and "
                         "multiwell scenarios only");
    }
    if (config.sweep) {
      throw config_error("--profile-out is for single-shot runs");
    }
    ScenarioConfig probe = config;
    const double amplitude = std::stod(probe.parameters.at("amplitude"));
    const WellProfile profile =
        config.scenario == Scenario::doublewell
            ? shoot_profile(amplitude)
            : multiwell_profile(
                  PotentialSpec::three_well(
                      probe.parameters.count("curvature")
                          ? std::stod(probe.parameters.at("curvature"))
                          : 1.0),
                  amplitude);
    std::ofstream profile_file(profile_out);
    if (!profile_file) {
      throw std::runtime_error("cannot write profile to '" + profile_out + "'");
    }
    write_profile_csv(profile, profile_file);
  }

  if (out_path.empty()) {
    emit(rows, format, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw std::runtime_error("cannot write output to '" + out_path + "'");
    }
    emit(rows, format, out);
    if (!out.good()) {
      throw std::runtime_error("write to '" + out_path + "' failed");
    }
  }
  return exit_code_for(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "entrobound: checks S <= 2 pi E R/(hbar c) across parameterized "
      "counterexample scenarios"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "csv";
  std::string out_path;
  std::string profile_out;
  std::vector<std::string> overrides;
  auto* run = app.add_subcommand("run", "run a scenario configuration");
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", out_path, "write the report here instead of stdout");
  run->add_option("--set", overrides, "override a config key (key=value)");
  run->add_option("--profile-out", profile_out,
                  "also export the field profile as CSV (doublewell/multiwell)");

  std::string data_path = "golden/paper_values.json";
  std::uint64_t seed = 1;
  auto* golden = app.add_subcommand(
      "golden", "run the paper-value regression suite");
  golden->add_option("--data", data_path, "golden data file");
  golden->add_option("--seed", seed, "seed for the randomized sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return run_command(config_path, format, out_path, overrides, profile_out);
    }
    return entrobound::golden::run_suite(data_path, seed, std::cout);
  } catch (const entrobound::config_error& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
