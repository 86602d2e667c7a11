#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dubovsky/analysis.hpp"
#include "dubovsky/sim.hpp"

namespace dubovsky {

struct OutputConfig {
  std::string dir = ".";
  bool csv = false;
  bool plots = false;

  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

/// Values swept by the `sweep` command. An empty list keeps the base value.
struct SweepSpec {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> delta;
  std::vector<double> omega;

  bool empty() const noexcept {
    return alpha.empty() && beta.empty() && delta.empty() && omega.empty();
  }

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct ScenarioConfig {
  std::string name = "custom";
  std::optional<std::string> preset;
  Scenario scenario;
  AnalysisThresholds analysis;
  OutputConfig output;
  SweepSpec sweep;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses the key-value scenario format:
///
///   # comment
///   preset = "fig4"          # optional base scenario
///   name = "my_run"
///   [model]      n, lambda, x_star, y_star
///   [orders]     alpha, beta
///   [initial]    a, b
///   [grid]       T, N | tau
///   [scheme]     sum_bound = as_paper | full_history
///                forcing_scale = as_paper | consistent
///   [forcing]    kind = zero | cosine | tabulated, delta, omega, samples = [..]
///   [analysis]   classifier thresholds (see AnalysisThresholds)
///   [output]     dir, csv, plots
///   [sweep]      alpha, beta, delta, omega as [v, ...] or range(start, stop, count)
///
/// Group sections are optional: `n = 0.2` at top level and `forcing.kind = cosine`
/// are equivalent spellings. Keys missing from the file come from the preset,
/// or from fig1 when no preset is named. Throws ConfigError with the line
/// number for syntax errors and the field name for constraint violations.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::string& path);

/// Writes every field explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

}  // namespace dubovsky
