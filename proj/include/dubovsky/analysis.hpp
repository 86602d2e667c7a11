#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dubovsky/sim.hpp"

namespace dubovsky {

struct PeakList {
  std::vector<std::size_t> indices;
  std::vector<double> values;

  std::size_t size() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }
};

/// Strict interior local maxima (a plateau reports its first index). When two
/// candidates are closer than min_separation the higher one wins, earlier
/// index on ties. Throws DomainError for fewer than 3 samples or
/// min_separation == 0.
PeakList find_peaks(std::span<const double> series, std::size_t min_separation);

/// Interior maxima and minima in index order, same separation rule applied to
/// each kind separately.
std::vector<std::size_t> find_extrema(std::span<const double> series,
                                      std::size_t min_separation);

/// Tunable constants of the period estimator and the regime classifier.
struct AnalysisThresholds {
  double settle_fraction = 0.5;
  double center_low = 0.95;
  double center_high = 1.05;
  double focus_max = 0.8;
  double cycle_low = 0.9;
  double cycle_high = 1.1;
  double closure_max = 0.02;
  double divergent_min = 10.0;
  /// Minimum spacing between accepted peaks, in time units.
  double peak_min_separation = 1.0;
  /// Envelope swing needed to call a series two-tone, relative to its range.
  double envelope_min_variation = 0.05;
  double two_tone_gap_ratio = 2.0;

  friend bool operator==(const AnalysisThresholds&, const AnalysisThresholds&) = default;
};

/// Throws ConfigError naming the offending field.
void validate(const AnalysisThresholds& t);

struct PeriodEstimate {
  std::optional<double> dominant;
  std::optional<double> secondary;
};

/// Peak-spacing period estimate of a uniformly sampled series. The dominant
/// period comes from the peaks of the peak-value envelope when that envelope
/// carries a separate slow oscillation; the fast spacing is then reported as
/// secondary.
PeriodEstimate estimate_periods(std::span<const double> series, double dt,
                                const AnalysisThresholds& thresholds = {});

/// Periods of the x component.
PeriodEstimate estimate_periods(const Trajectory& traj,
                                const AnalysisThresholds& thresholds = {});

enum class Regime { center, stable_focus, limit_cycle, divergent, undetermined };

std::string_view to_string(Regime r) noexcept;

struct RegimeReport {
  Regime regime = Regime::undetermined;
  std::optional<double> dominant_period;
  std::optional<double> secondary_period;
  /// Peak-to-trough range of x over the last quarter over that of the first.
  std::optional<double> amplitude_trend;
  /// Same ratio between the second and first halves of the settled window.
  std::optional<double> settled_amplitude_trend;
  /// Distance from the final (x, y) point to the previous cycle's polyline.
  std::optional<double> closure_metric;
  /// Bounding-box diagonal of that cycle in the (x, y) plane.
  std::optional<double> cycle_amplitude;
  /// Successive x swings between extrema in the settled window.
  std::vector<double> settled_swings;
};

/// Whether the classifier may treat the run as forced. Trajectories with a
/// scenario attached resolve this themselves; bare trajectories default to
/// unknown, which admits both the center and limit-cycle rules.
enum class ForcingHint { from_scenario, none, present, unknown };

RegimeReport classify_regime(const Trajectory& traj,
                             const AnalysisThresholds& thresholds = {},
                             ForcingHint hint = ForcingHint::from_scenario);

RegimeReport classify_regime(const Trajectory& traj, double settle_fraction);

/// Log-slope (per time unit) of |x - centre| at successive x extrema, fitted by
/// least squares. Negative for damped oscillation. Requires at least two
/// extrema.
std::optional<double> extremum_decay_rate(const Trajectory& traj, double centre,
                                          const AnalysisThresholds& thresholds = {});

}  // namespace dubovsky
