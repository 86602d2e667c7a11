#include "dubovsky/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dubovsky/errors.hpp"

namespace dubovsky {

namespace {

std::vector<std::size_t> local_maxima(std::span<const double> s) {
  std::vector<std::size_t> out;
  const std::size_t n = s.size();
  std::size_t i = 1;
  while (i + 1 < n) {
    if (s[i] > s[i - 1]) {
      std::size_t j = i;
      while (j + 1 < n && s[j + 1] == s[i]) ++j;
      if (j + 1 < n && s[j + 1] < s[i]) out.push_back(i);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<std::size_t> enforce_separation(std::span<const double> s,
                                            std::vector<std::size_t> candidates,
                                            std::size_t min_separation) {
  if (min_separation <= 1 || candidates.size() < 2) return candidates;
  std::vector<std::size_t> order = candidates;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
  std::vector<std::size_t> kept;
  for (std::size_t c : order) {
    const bool clear = std::none_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return (c > k ? c - k : k - c) < min_separation;
    });
    if (clear) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

double range_of(std::span<const double> s) {
  if (s.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return *hi - *lo;
}

std::size_t separation_in_steps(double time_sep, double dt) {
  const double steps = std::round(time_sep / dt);
  return steps < 1.0 ? 1 : static_cast<std::size_t>(steps);
}

double point_segment_distance(double px, double py, double ax, double ay, double bx,
                              double by) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((px - ax) * dx + (py - ay) * dy) / len2, 0.0, 1.0);
  return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

bool in_band(const std::optional<double>& v, double lo, double hi) {
  return v && *v >= lo && *v <= hi;
}

}  // namespace

PeakList find_peaks(std::span<const double> series, std::size_t min_separation) {
  if (series.size() < 3) throw DomainError("find_peaks needs at least 3 samples");
  if (min_separation < 1) throw DomainError("find_peaks: min_separation must be >= 1");
  PeakList out;
  out.indices = enforce_separation(series, local_maxima(series), min_separation);
  out.values.reserve(out.indices.size());
  for (auto i : out.indices) out.values.push_back(series[i]);
  return out;
}

std::vector<std::size_t> find_extrema(std::span<const double> series,
                                      std::size_t min_separation) {
  auto maxima = find_peaks(series, min_separation).indices;
  std::vector<double> negated(series.begin(), series.end());
  for (double& v : negated) v = -v;
  const auto minima = find_peaks(negated, min_separation).indices;
  maxima.insert(maxima.end(), minima.begin(), minima.end());
  std::sort(maxima.begin(), maxima.end());
  return maxima;
}

void validate(const AnalysisThresholds& t) {
  auto fail = [](const std::string& what) { throw ConfigError("analysis." + what); };
  if (!(t.settle_fraction > 0.0 && t.settle_fraction < 1.0)) {
    fail("settle_fraction must lie in (0,1)");
  }
  if (!(t.center_low > 0.0 && t.center_low <= t.center_high)) {
    fail("center_low must be positive and not exceed center_high");
  }
  if (!(t.cycle_low > 0.0 && t.cycle_low <= t.cycle_high)) {
    fail("cycle_low must be positive and not exceed cycle_high");
  }
  if (!(t.focus_max > 0.0)) fail("focus_max must be positive");
  if (!(t.closure_max > 0.0)) fail("closure_max must be positive");
  if (!(t.divergent_min > 1.0)) fail("divergent_min must exceed 1");
  if (!(t.peak_min_separation > 0.0)) fail("peak_min_separation must be positive");
  if (!(t.envelope_min_variation >= 0.0)) fail("envelope_min_variation must be non-negative");
  if (!(t.two_tone_gap_ratio > 1.0)) fail("two_tone_gap_ratio must exceed 1");
}

PeriodEstimate estimate_periods(std::span<const double> series, double dt,
                                const AnalysisThresholds& th) {
  if (series.size() < 3 || !(dt > 0.0)) return {};
  const auto peaks = find_peaks(series, separation_in_steps(th.peak_min_separation, dt));
  if (peaks.size() < 2) return {};

  const auto spacing = [&](std::size_t first, std::size_t last, std::size_t count) {
    return static_cast<double>(last - first) * dt / static_cast<double>(count - 1);
  };
  const double fast = spacing(peaks.indices.front(), peaks.indices.back(), peaks.size());

  if (peaks.size() >= 3) {
    const auto envelope = find_peaks(peaks.values, 1);
    const bool modulated =
        range_of(peaks.values) > th.envelope_min_variation * range_of(series);
    if (envelope.size() >= 2 && modulated) {
      const double slow = spacing(peaks.indices[envelope.indices.front()],
                                  peaks.indices[envelope.indices.back()], envelope.size());
      if (slow >= th.two_tone_gap_ratio * fast) return {slow, fast};
    }
  }
  return {fast, std::nullopt};
}

PeriodEstimate estimate_periods(const Trajectory& traj, const AnalysisThresholds& th) {
  if (traj.size() < 3) return {};
  return estimate_periods(traj.xs, traj.step(), th);
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::center:
      return "center";
    case Regime::stable_focus:
      return "stable_focus";
    case Regime::limit_cycle:
      return "limit_cycle";
    case Regime::divergent:
      return "divergent";
    case Regime::undetermined:
      break;
  }
  return "undetermined";
}

RegimeReport classify_regime(const Trajectory& traj, const AnalysisThresholds& th,
                             ForcingHint hint) {
  RegimeReport report;
  const std::size_t n = traj.size();
  if (n < 4 || traj.ys.size() != n) return report;

  const auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(traj.xs.begin(), traj.xs.end(), finite) ||
      !std::all_of(traj.ys.begin(), traj.ys.end(), finite)) {
    report.regime = Regime::divergent;
    return report;
  }

  if (hint == ForcingHint::from_scenario) {
    hint = !traj.scenario ? ForcingHint::unknown
           : traj.scenario->forcing.vanishes() ? ForcingHint::none
                                                : ForcingHint::present;
  }

  const std::span<const double> xs(traj.xs);
  const std::span<const double> ys(traj.ys);
  const double dt = traj.step();
  const std::size_t sep = separation_in_steps(th.peak_min_separation, dt);

  const std::size_t quarter = std::max<std::size_t>(n / 4, 2);
  const double early = range_of(xs.first(quarter));
  const double late = range_of(xs.last(quarter));
  if (early > 0.0) report.amplitude_trend = late / early;

  const auto settle_start = static_cast<std::size_t>(
      std::floor(th.settle_fraction * static_cast<double>(n - 1)));
  const auto settled = xs.subspan(settle_start);
  const std::size_t half = settled.size() / 2;
  if (half >= 2) {
    const double first = range_of(settled.first(half));
    if (first > 0.0) report.settled_amplitude_trend = range_of(settled.subspan(half)) / first;
  }

  const auto periods = estimate_periods(xs, dt, th);
  report.dominant_period = periods.dominant;
  report.secondary_period = periods.secondary;

  const auto peaks = find_peaks(xs, sep);
  if (peaks.size() >= 2) {
    const std::size_t i0 = peaks.indices[peaks.size() - 2];
    const std::size_t i1 = peaks.indices.back();
    const double px = xs[n - 1];
    const double py = ys[n - 1];
    double best = std::hypot(px - xs[i0], py - ys[i0]);
    for (std::size_t k = i0; k < i1; ++k) {
      best = std::min(best, point_segment_distance(px, py, xs[k], ys[k], xs[k + 1], ys[k + 1]));
    }
    report.closure_metric = best;
    report.cycle_amplitude =
        std::hypot(range_of(xs.subspan(i0, i1 - i0 + 1)), range_of(ys.subspan(i0, i1 - i0 + 1)));
  }

  std::vector<std::size_t> settled_extrema;
  for (std::size_t e : find_extrema(xs, sep)) {
    if (e >= settle_start) settled_extrema.push_back(e);
  }
  for (std::size_t k = 1; k < settled_extrema.size(); ++k) {
    report.settled_swings.push_back(
        std::abs(xs[settled_extrema[k]] - xs[settled_extrema[k - 1]]));
  }

  const bool swings_decay =
      report.settled_swings.size() >= 2 &&
      std::adjacent_find(report.settled_swings.begin(), report.settled_swings.end(),
                         std::less_equal<>()) == report.settled_swings.end();
  const bool closed = report.closure_metric && report.cycle_amplitude &&
                      *report.cycle_amplitude > 0.0 &&
                      *report.closure_metric < th.closure_max * *report.cycle_amplitude;

  if (report.amplitude_trend && *report.amplitude_trend > th.divergent_min) {
    report.regime = Regime::divergent;
  } else if (hint != ForcingHint::present &&
             in_band(report.amplitude_trend, th.center_low, th.center_high)) {
    report.regime = Regime::center;
  } else if (hint != ForcingHint::none &&
             in_band(report.settled_amplitude_trend, th.cycle_low, th.cycle_high) && closed) {
    report.regime = Regime::limit_cycle;
  } else if (report.amplitude_trend && *report.amplitude_trend < th.focus_max &&
             swings_decay) {
    report.regime = Regime::stable_focus;
  }
  return report;
}

RegimeReport classify_regime(const Trajectory& traj, double settle_fraction) {
  AnalysisThresholds th;
  th.settle_fraction = settle_fraction;
  validate(th);
  return classify_regime(traj, th);
}

std::optional<double> extremum_decay_rate(const Trajectory& traj, double centre,
                                          const AnalysisThresholds& th) {
  if (traj.size() < 3) return std::nullopt;
  const double dt = traj.step();
  std::vector<double> ts;
  std::vector<double> logs;
  for (std::size_t e : find_extrema(traj.xs, separation_in_steps(th.peak_min_separation, dt))) {
    const double dev = std::abs(traj.xs[e] - centre);
    if (dev > 0.0) {
      ts.push_back(traj.times[e]);
      logs.push_back(std::log(dev));
    }
  }
  if (ts.size() < 2) return std::nullopt;
  const double m = static_cast<double>(ts.size());
  const double tbar = std::accumulate(ts.begin(), ts.end(), 0.0) / m;
  const double lbar = std::accumulate(logs.begin(), logs.end(), 0.0) / m;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    num += (ts[i] - tbar) * (logs[i] - lbar);
    den += (ts[i] - tbar) * (ts[i] - tbar);
  }
  if (den == 0.0) return std::nullopt;
  return num / den;
}

}  // namespace dubovsky
