#include "dubovsky/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "dubovsky/config.hpp"
#include "dubovsky/csv.hpp"
#include "dubovsky/errors.hpp"
#include "dubovsky/numfmt.hpp"
#include "dubovsky/plot.hpp"
#include "dubovsky/presets.hpp"
#include "dubovsky/sweep.hpp"

namespace dubovsky {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScenarioConfig resolve_scenario(const std::string& preset_name, const std::string& config_path) {
  if (!preset_name.empty()) return preset(preset_name);
  ScenarioConfig cfg = load_config(config_path);
  if (cfg.name == "custom") cfg.name = fs::path(config_path).stem().string();
  return cfg;
}

std::string opt_text(const std::optional<double>& v) {
  return v ? format_double(*v) : "none";
}

nlohmann::json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

int run_command(const std::string& preset_name, const std::string& config_path,
                const std::string& out_dir, bool csv, bool plots, double tau,
                std::ostream& out) {
  ScenarioConfig cfg = resolve_scenario(preset_name, config_path);
  if (tau > 0.0) cfg.scenario.grid = GridSpec::from_step(cfg.scenario.grid.T(), tau);
  if (!out_dir.empty()) cfg.output.dir = out_dir;
  csv = csv || cfg.output.csv;
  plots = plots || cfg.output.plots;

  const Trajectory traj = simulate(cfg.scenario);

  if (csv || plots) {
    std::error_code ec;
    fs::create_directories(cfg.output.dir, ec);
    if (ec) throw IoError("cannot create output directory " + cfg.output.dir + ": " + ec.message());
  }
  const fs::path dir(cfg.output.dir);
  if (csv) write_csv(traj, (dir / (cfg.name + ".csv")).string());
  if (plots) {
    PlotSpec osc;
    osc.kind = PlotSpec::Kind::oscillogram;
    render_plot(traj, osc, (dir / (cfg.name + "_osc.svg")).string());
    PlotSpec phase;
    phase.kind = PlotSpec::Kind::phase;
    render_plot(traj, phase, (dir / (cfg.name + "_phase.svg")).string());
  }
  out << format_report(classify_regime(traj, cfg.analysis), cfg.name);
  return kExitOk;
}

int analyze_command(const std::string& csv_path, const std::string& preset_name,
                    const std::string& config_path, const std::string& forcing,
                    std::ostream& out) {
  Trajectory traj = read_csv(csv_path);
  AnalysisThresholds th;
  if (!preset_name.empty() || !config_path.empty()) {
    const auto cfg = resolve_scenario(preset_name, config_path);
    th = cfg.analysis;
    traj.scenario = cfg.scenario;
  }
  ForcingHint hint = ForcingHint::from_scenario;
  if (forcing == "zero") hint = ForcingHint::none;
  if (forcing == "present") hint = ForcingHint::present;
  if (forcing == "unknown") hint = ForcingHint::unknown;
  if (traj.size() < 4) throw ConfigError("CSV holds fewer than 4 rows; nothing to analyze");
  out << format_report(classify_regime(traj, th, hint), fs::path(csv_path).stem().string());
  return kExitOk;
}

int sweep_command(const std::string& config_path, const std::string& out_path, unsigned jobs,
                  std::ostream& out) {
  const auto cfg = load_config(config_path);
  const auto table = format_sweep_csv(run_sweep(cfg, jobs));
  if (out_path.empty()) {
    out << table;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + out_path + " for writing");
  file << table;
  if (!file) throw IoError("failed writing " + out_path);
  return kExitOk;
}

}  // namespace

std::string format_report(const RegimeReport& r, const std::string& label) {
  std::string text;
  text += "scenario=" + label + "\n";
  text += "regime=" + std::string(to_string(r.regime)) + "\n";
  text += "dominant_period=" + opt_text(r.dominant_period) + "\n";
  text += "secondary_period=" + opt_text(r.secondary_period) + "\n";
  text += "amplitude_trend=" + opt_text(r.amplitude_trend) + "\n";
  text += "settled_amplitude_trend=" + opt_text(r.settled_amplitude_trend) + "\n";
  text += "closure_metric=" + opt_text(r.closure_metric) + "\n";
  text += "cycle_amplitude=" + opt_text(r.cycle_amplitude) + "\n";

  const nlohmann::json summary = {
      {"scenario", label},
      {"regime", std::string(to_string(r.regime))},
      {"dominant_period", opt_json(r.dominant_period)},
      {"secondary_period", opt_json(r.secondary_period)},
      {"amplitude_trend", opt_json(r.amplitude_trend)},
      {"settled_amplitude_trend", opt_json(r.settled_amplitude_trend)},
      {"closure_metric", opt_json(r.closure_metric)},
      {"cycle_amplitude", opt_json(r.cycle_amplitude)},
  };
  text += "json=" + summary.dump() + "\n";
  return text;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional Dubovsky long-wave simulator"};
  app.require_subcommand(1);

  auto* presets_cmd = app.add_subcommand("presets", "List the built-in scenarios");

  std::string preset_name;
  std::string config_path;
  std::string out_dir;
  bool want_csv = false;
  bool want_plots = false;
  double tau = 0.0;
  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario");
  auto* run_preset = run_cmd->add_option("--preset", preset_name, "Built-in scenario fig1..fig6");
  auto* run_config = run_cmd->add_option("--config", config_path, "Scenario file");
  run_preset->excludes(run_config);
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_flag("--csv", want_csv, "Write <name>.csv");
  run_cmd->add_flag("--plots", want_plots, "Write <name>_osc.svg and <name>_phase.svg");
  run_cmd->add_option("--tau", tau, "Override the time step")
      ->check(CLI::PositiveNumber);

  std::string csv_path;
  std::string forcing = "auto";
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a trajectory CSV");
  analyze_cmd->add_option("--csv", csv_path, "Trajectory file (t,x,y)")->required();
  auto* an_preset = analyze_cmd->add_option("--preset", preset_name,
                                            "Attach a scenario for forcing and thresholds");
  auto* an_config = analyze_cmd->add_option("--config", config_path, "Scenario file");
  an_preset->excludes(an_config);
  analyze_cmd->add_option("--forcing", forcing, "Forcing hint")
      ->check(CLI::IsMember({"auto", "zero", "present", "unknown"}));

  std::string sweep_out;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep_cmd = app.add_subcommand("sweep", "Regime table over parameter ranges");
  sweep_cmd->add_option("--config", config_path, "Scenario file with a [sweep] section")
      ->required();
  sweep_cmd->add_option("--out", sweep_out, "CSV destination (default: stdout)");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (presets_cmd->parsed()) {
      for (const auto& p : preset_catalog()) out << p.name << "  " << p.summary << "\n";
      return kExitOk;
    }
    if (run_cmd->parsed()) {
      if (preset_name.empty() && config_path.empty()) {
        throw UsageError("run: one of --preset or --config is required");
      }
      return run_command(preset_name, config_path, out_dir, want_csv, want_plots, tau, out);
    }
    if (analyze_cmd->parsed()) {
      return analyze_command(csv_path, preset_name, config_path, forcing, out);
    }
    if (sweep_cmd->parsed()) return sweep_command(config_path, sweep_out, jobs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dubovsky
