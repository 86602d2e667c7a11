#include "dubovsky/sim.hpp"

#include <cmath>
#include <string>

#include "dubovsky/errors.hpp"

namespace dubovsky {

GridSpec::GridSpec(double T, std::size_t N) : T_(T), N_(N), tau_(0.0) {
  if (!std::isfinite(T) || T <= 0.0) throw ConfigError("T must be finite and positive");
  if (N < 2) throw ConfigError("N must be at least 2");
  tau_ = T / static_cast<double>(N);
}

GridSpec GridSpec::from_step(double T, double tau) {
  if (!std::isfinite(tau) || tau <= 0.0) {
    throw ConfigError("tau must be finite and positive");
  }
  if (!std::isfinite(T) || T <= 0.0) throw ConfigError("T must be finite and positive");
  const double steps = std::round(T / tau);
  if (steps < 2.0) throw ConfigError("tau too large: grid needs at least 2 steps");
  return GridSpec(T, static_cast<std::size_t>(steps));
}

std::string_view to_string(SumBound b) noexcept {
  return b == SumBound::as_paper ? "as_paper" : "full_history";
}

std::string_view to_string(ForcingScale s) noexcept {
  return s == ForcingScale::as_paper ? "as_paper" : "consistent";
}

std::optional<SumBound> parse_sum_bound(std::string_view s) noexcept {
  if (s == "as_paper") return SumBound::as_paper;
  if (s == "full_history") return SumBound::full_history;
  return std::nullopt;
}

std::optional<ForcingScale> parse_forcing_scale(std::string_view s) noexcept {
  if (s == "as_paper") return ForcingScale::as_paper;
  if (s == "consistent") return ForcingScale::consistent;
  return std::nullopt;
}

double Trajectory::step() const {
  if (times.size() < 2) throw DomainError("trajectory has fewer than two nodes");
  if (scenario) return scenario->grid.tau();
  return (times.back() - times.front()) / static_cast<double>(times.size() - 1);
}

NonlocalStepper::NonlocalStepper(const Scenario& scenario)
    : scenario_(scenario),
      A_(scheme_coefficient(scenario.orders.alpha, scenario.grid.tau()).value),
      B_(scheme_coefficient(scenario.orders.beta, scenario.grid.tau()).value),
      p_(scenario.orders.alpha, scenario.grid.N()),
      q_(scenario.orders.beta, scenario.grid.N()) {}

std::size_t NonlocalStepper::memory_terms(std::size_t j) const noexcept {
  if (j == 0) return 0;
  return scenario_.options.sum_bound == SumBound::as_paper ? j - 1 : j;
}

State NonlocalStepper::step(std::span<const double> xs, std::span<const double> ys,
                            std::size_t j) const {
  const auto& p = scenario_.params;
  const double x = xs[j];
  const double y = ys[j];

  double mem_x = 0.0;
  double mem_y = 0.0;
  const auto terms = memory_terms(j);
  const auto pw = p_.values();
  const auto qw = q_.values();
  for (std::size_t k = 1; k <= terms; ++k) {
    mem_x += pw[k - 1] * (xs[j - k + 1] - xs[j - k]);
    mem_y += qw[k - 1] * (ys[j - k + 1] - ys[j - k]);
  }

  double f = scenario_.forcing.at(scenario_.grid.time(j), j);
  if (scenario_.options.forcing_scale == ForcingScale::consistent) f /= B_;

  const double cx = p.lambda() * p.n() / A_;
  const double cy = p.n() * (1.0 - p.n()) / B_;
  return {x * (1.0 - cx * (x - 1.0) * (y - p.y_star())) - mem_x,
          y * (1.0 + cy * y * (x - p.x_star())) - mem_y + f};
}

Trajectory simulate(const Scenario& scenario) {
  const auto N = scenario.grid.N();
  scenario.forcing.check_covers(N + 1);

  Trajectory out;
  out.times.resize(N + 1);
  out.xs.resize(N + 1);
  out.ys.resize(N + 1);
  for (std::size_t j = 0; j <= N; ++j) out.times[j] = scenario.grid.time(j);
  out.xs[0] = scenario.ic.a;
  out.ys[0] = scenario.ic.b;

  const NonlocalStepper stepper(scenario);
  for (std::size_t j = 0; j < N; ++j) {
    const State next = stepper.step(out.xs, out.ys, j);
    if (!std::isfinite(next.x) || !std::isfinite(next.y) ||
        std::abs(next.x) > kBlowUpThreshold || std::abs(next.y) > kBlowUpThreshold) {
      throw BlowUpError(j + 1, out.xs[j], out.ys[j]);
    }
    out.xs[j + 1] = next.x;
    out.ys[j + 1] = next.y;
  }
  out.scenario = scenario;
  return out;
}

Trajectory simulate(const DubovskyParams& p, const FractionalOrders& orders,
                    const Forcing& f, const InitialConditions& ic, const GridSpec& grid,
                    const SchemeOptions& opts) {
  return simulate(Scenario{p, orders, f, ic, grid, opts});
}

}  // namespace dubovsky
