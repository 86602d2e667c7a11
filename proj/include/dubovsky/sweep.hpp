#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dubovsky/analysis.hpp"
#include "dubovsky/config.hpp"

namespace dubovsky {

struct SweepPoint {
  std::size_t index = 0;
  Scenario scenario;
};

/// Cartesian product of the configured ranges, alpha outermost, then beta,
/// delta, omega. Sweeping delta or omega turns the base forcing into a cosine
/// (omega defaults to 1 on a zero base).
std::vector<SweepPoint> expand_sweep(const ScenarioConfig& config);

struct SweepRow {
  SweepPoint point;
  RegimeReport report;
  /// Empty on success, otherwise the blow-up message.
  std::string failure;
};

/// Runs every point on up to `jobs` threads; rows come back in index order.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config, unsigned jobs);

std::string format_sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace dubovsky
