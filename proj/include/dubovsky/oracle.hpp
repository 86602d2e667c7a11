#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dubovsky/model.hpp"
#include "dubovsky/scheme.hpp"
#include "dubovsky/sim.hpp"

// Reference computations for validating the nonlocal scheme. Nothing in the
// production stepping path depends on this header.

namespace dubovsky::oracle {

using PlanarField = std::function<State(double t, State s)>;

/// Classical fourth-order Runge-Kutta on the grid nodes. Same blow-up rule as
/// simulate().
Trajectory rk4_integrate(const PlanarField& field, State initial, const GridSpec& grid);

/// RK4 solution of the integer-order system dx/dt = rhs_x, dy/dt = rhs_y + f(t).
Trajectory rk4_integer_limit(const DubovskyParams& p, const Forcing& f,
                             const InitialConditions& ic, const GridSpec& grid);

/// Discrete Gerasimov-Caputo derivative of uniformly spaced samples, using the
/// scheme's coefficient and weights with the full history:
///   D_j = A [ (s_j - s_{j-1}) + sum_{k=1}^{j-1} w_k (s_{j-k} - s_{j-k-1}) ].
/// Element i of the result belongs to node i + 1; node 0 has no value.
std::vector<double> caputo_l1_apply(std::span<const double> samples, FractionalOrder order,
                                    double tau);

enum class Solver { scheme, rk4 };

enum class Reference {
  integer_limit_oracle,  // RK4 at the reference step; integer orders only
  self_refined,          // the candidate solver itself at the reference step
};

struct ConvergenceStudy {
  std::vector<double> taus;
  std::vector<double> errors;
  /// Least-squares slope of log(error) against log(tau). Empty when the errors
  /// are at rounding level or a run blew up.
  std::optional<double> order;
  std::string note;
};

/// Max-norm error over shared nodes for each step in `taus` (at least three,
/// each half the previous), against a reference run at `reference_tau`, which
/// must divide every step.
ConvergenceStudy convergence_order(const Scenario& run, std::span<const double> taus,
                                   Reference reference, double reference_tau,
                                   Solver candidate = Solver::scheme);

/// Max-norm difference over nodes shared by two runs on nested grids.
double max_nodal_difference(const Trajectory& coarse, const Trajectory& fine);

}  // namespace dubovsky::oracle
