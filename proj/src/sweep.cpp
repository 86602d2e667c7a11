#include "dubovsky/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dubovsky/errors.hpp"
#include "dubovsky/numfmt.hpp"

namespace dubovsky {

namespace {

std::vector<double> axis(const std::vector<double>& values, double base) {
  return values.empty() ? std::vector<double>{base} : values;
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace

std::vector<SweepPoint> expand_sweep(const ScenarioConfig& config) {
  const Scenario& base = config.scenario;
  const auto* cos = std::get_if<Forcing::Cosine>(&base.forcing.variant());
  const bool forcing_swept = !config.sweep.delta.empty() || !config.sweep.omega.empty();
  if (forcing_swept && std::holds_alternative<Forcing::Tabulated>(base.forcing.variant())) {
    throw ConfigError("sweep.delta/sweep.omega cannot be combined with tabulated forcing");
  }

  const auto alphas = axis(config.sweep.alpha, base.orders.alpha.value());
  const auto betas = axis(config.sweep.beta, base.orders.beta.value());
  const auto deltas = axis(config.sweep.delta, cos ? cos->delta : 0.0);
  const auto omegas = axis(config.sweep.omega, cos ? cos->omega : 1.0);

  std::vector<SweepPoint> points;
  points.reserve(alphas.size() * betas.size() * deltas.size() * omegas.size());
  for (double a : alphas) {
    for (double b : betas) {
      for (double d : deltas) {
        for (double w : omegas) {
          SweepPoint p;
          p.index = points.size();
          p.scenario = base;
          p.scenario.orders = {FractionalOrder(a), FractionalOrder(b)};
          if (forcing_swept) p.scenario.forcing = Forcing::cosine(d, w);
          points.push_back(std::move(p));
        }
      }
    }
  }
  return points;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config, unsigned jobs) {
  auto points = expand_sweep(config);
  std::vector<SweepRow> rows(points.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      SweepRow& row = rows[i];
      row.point = std::move(points[i]);
      try {
        row.report = classify_regime(simulate(row.point.scenario), config.analysis);
      } catch (const BlowUpError& e) {
        row.report.regime = Regime::divergent;
        row.failure = e.what();
      }
    }
  };

  const unsigned n = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "index,alpha,beta,forcing,delta,omega,regime,dominant_period,secondary_period,"
      "amplitude_trend,settled_amplitude_trend,closure_metric,cycle_amplitude,failure\n";
  for (const auto& row : rows) {
    const Scenario& s = row.point.scenario;
    const auto* cos = std::get_if<Forcing::Cosine>(&s.forcing.variant());
    const auto& r = row.report;
    out += std::to_string(row.point.index) + ',' + format_double(s.orders.alpha.value()) + ',' +
           format_double(s.orders.beta.value()) + ',' + std::string(s.forcing.kind_name()) +
           ',' + (cos ? format_double(cos->delta) : "") + ',' +
           (cos ? format_double(cos->omega) : "") + ',' + std::string(to_string(r.regime)) +
           ',' + opt(r.dominant_period) + ',' + opt(r.secondary_period) + ',' +
           opt(r.amplitude_trend) + ',' + opt(r.settled_amplitude_trend) + ',' +
           opt(r.closure_metric) + ',' + opt(r.cycle_amplitude) + ',';
    // Blow-up messages contain commas.
    if (!row.failure.empty()) out += '"' + row.failure + '"';
    out += '\n';
  }
  return out;
}

}  // namespace dubovsky
