#include "dubovsky/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "dubovsky/errors.hpp"

namespace dubovsky::oracle {

namespace {

bool runaway(State s) {
  return !std::isfinite(s.x) || !std::isfinite(s.y) || std::abs(s.x) > kBlowUpThreshold ||
         std::abs(s.y) > kBlowUpThreshold;
}

Trajectory run_solver(const Scenario& s, Solver solver) {
  if (solver == Solver::rk4) return rk4_integer_limit(s.params, s.forcing, s.ic, s.grid);
  return simulate(s);
}

constexpr double kErrorFloor = 1e-13;

}  // namespace

Trajectory rk4_integrate(const PlanarField& field, State initial, const GridSpec& grid) {
  const auto N = grid.N();
  const double h = grid.tau();
  Trajectory out;
  out.times.resize(N + 1);
  out.xs.resize(N + 1);
  out.ys.resize(N + 1);
  out.xs[0] = initial.x;
  out.ys[0] = initial.y;
  State s = initial;
  for (std::size_t j = 0; j < N; ++j) {
    const double t = grid.time(j);
    out.times[j] = t;
    const State k1 = field(t, s);
    const State k2 = field(t + 0.5 * h, {s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y});
    const State k3 = field(t + 0.5 * h, {s.x + 0.5 * h * k2.x, s.y + 0.5 * h * k2.y});
    const State k4 = field(t + h, {s.x + h * k3.x, s.y + h * k3.y});
    const State next{s.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
                     s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
    if (runaway(next)) throw BlowUpError(j + 1, s.x, s.y);
    s = next;
    out.xs[j + 1] = s.x;
    out.ys[j + 1] = s.y;
  }
  out.times[N] = grid.time(N);
  return out;
}

Trajectory rk4_integer_limit(const DubovskyParams& p, const Forcing& f,
                             const InitialConditions& ic, const GridSpec& grid) {
  f.check_covers(grid.N() + 1);
  const double tau = grid.tau();
  const PlanarField field = [&](double t, State s) {
    return State{rhs_x(s.x, s.y, p), rhs_y(s.x, s.y, p, f.at_time(t, tau))};
  };
  auto traj = rk4_integrate(field, {ic.a, ic.b}, grid);
  Scenario meta;
  meta.params = p;
  meta.forcing = f;
  meta.ic = ic;
  meta.grid = grid;
  traj.scenario = meta;
  return traj;
}

std::vector<double> caputo_l1_apply(std::span<const double> samples, FractionalOrder order,
                                    double tau) {
  if (samples.size() < 2) throw DomainError("caputo_l1_apply needs at least 2 samples");
  const double A = scheme_coefficient(order, tau).value;
  const auto w = memory_weights(order, samples.size());
  std::vector<double> out(samples.size() - 1);
  for (std::size_t j = 1; j < samples.size(); ++j) {
    double acc = samples[j] - samples[j - 1];
    for (std::size_t k = 1; k < j; ++k) acc += w[k] * (samples[j - k] - samples[j - k - 1]);
    out[j - 1] = A * acc;
  }
  return out;
}

double max_nodal_difference(const Trajectory& coarse, const Trajectory& fine) {
  if (coarse.size() < 2 || fine.size() < 2) {
    throw DomainError("max_nodal_difference needs two nodes per trajectory");
  }
  const double ratio = coarse.step() / fine.step();
  const double m = std::round(ratio);
  if (m < 1.0 || std::abs(ratio - m) > 1e-9 * m) {
    throw DomainError("grids are not nested: step ratio " + std::to_string(ratio));
  }
  const auto stride = static_cast<std::size_t>(m);
  double err = 0.0;
  for (std::size_t j = 0; j < coarse.size() && j * stride < fine.size(); ++j) {
    err = std::max({err, std::abs(coarse.xs[j] - fine.xs[j * stride]),
                    std::abs(coarse.ys[j] - fine.ys[j * stride])});
  }
  return err;
}

ConvergenceStudy convergence_order(const Scenario& run, std::span<const double> taus,
                                   Reference reference, double reference_tau,
                                   Solver candidate) {
  if (taus.size() < 3) throw DomainError("convergence_order needs at least 3 step sizes");
  for (std::size_t i = 1; i < taus.size(); ++i) {
    if (std::abs(taus[i] * 2.0 - taus[i - 1]) > 1e-12 * taus[i - 1]) {
      throw DomainError("convergence_order: each step must halve the previous one");
    }
  }
  if (reference == Reference::integer_limit_oracle &&
      !(run.orders.alpha.is_integer() && run.orders.beta.is_integer())) {
    throw ConfigError("the integer-limit oracle applies only to alpha = beta = 1");
  }

  ConvergenceStudy study;
  study.taus.assign(taus.begin(), taus.end());
  const double T = run.grid.T();
  try {
    Scenario ref_run = run;
    ref_run.grid = GridSpec::from_step(T, reference_tau);
    const Trajectory ref = reference == Reference::integer_limit_oracle
                               ? run_solver(ref_run, Solver::rk4)
                               : run_solver(ref_run, candidate);
    for (double tau : taus) {
      Scenario s = run;
      s.grid = GridSpec::from_step(T, tau);
      study.errors.push_back(max_nodal_difference(run_solver(s, candidate), ref));
    }
  } catch (const BlowUpError& e) {
    study.note = e.what();
    return study;
  }

  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < study.errors.size(); ++i) {
    if (study.errors[i] > kErrorFloor) {
      lx.push_back(std::log(study.taus[i]));
      ly.push_back(std::log(study.errors[i]));
    }
  }
  if (lx.size() < 2) {
    study.note = "errors at rounding level; order not estimated";
    return study;
  }
  const double m = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i] / m;
    my += ly[i] / m;
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  study.order = num / den;
  return study;
}

}  // namespace dubovsky::oracle
