#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dubovsky/model.hpp"
#include "dubovsky/scheme.hpp"

namespace dubovsky {

/// Uniform grid on [0, T] with N steps; tau = T / N.
class GridSpec {
 public:
  GridSpec(double T, std::size_t N);

  /// N = round(T / tau); the stored step is then recomputed as T / N.
  static GridSpec from_step(double T, double tau);

  double T() const noexcept { return T_; }
  std::size_t N() const noexcept { return N_; }
  double tau() const noexcept { return tau_; }
  double time(std::size_t j) const noexcept { return static_cast<double>(j) * tau_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  double T_;
  std::size_t N_;
  double tau_;
};

struct FractionalOrders {
  FractionalOrder alpha;
  FractionalOrder beta;

  friend bool operator==(const FractionalOrders&, const FractionalOrders&) = default;
};

/// Upper limit of the memory sum at level j.
enum class SumBound {
  as_paper,      // k = 1..j-1
  full_history,  // k = 1..j, the standard L1 sum
};

/// How the forcing sample enters the y update.
enum class ForcingScale {
  as_paper,    // + f_j
  consistent,  // + f_j / B
};

struct SchemeOptions {
  SumBound sum_bound = SumBound::as_paper;
  ForcingScale forcing_scale = ForcingScale::as_paper;

  friend bool operator==(const SchemeOptions&, const SchemeOptions&) = default;
};

std::string_view to_string(SumBound b) noexcept;
std::string_view to_string(ForcingScale s) noexcept;
std::optional<SumBound> parse_sum_bound(std::string_view s) noexcept;
std::optional<ForcingScale> parse_forcing_scale(std::string_view s) noexcept;

/// Everything simulate() needs for one run.
struct Scenario {
  DubovskyParams params{0.2, 2.25, 1.3, 0.5};
  FractionalOrders orders{FractionalOrder(1.0), FractionalOrder(1.0)};
  Forcing forcing;
  InitialConditions ic{1.35, 0.5};
  GridSpec grid{250.0, 5000};
  SchemeOptions options;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Grid-aligned solution. `scenario` is absent for trajectories read back
/// from disk.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> xs;
  std::vector<double> ys;
  std::optional<Scenario> scenario;

  std::size_t size() const noexcept { return xs.size(); }
  double step() const;
};

/// Values beyond this magnitude are treated as blow-up.
inline constexpr double kBlowUpThreshold = 1e12;

struct State {
  double x;
  double y;
};

/// One level of the explicit nonlocal scheme:
///   x_{j+1} = x_j (1 - (lambda n / A)(x_j - 1)(y_j - y*)) - sum_k p_k (x_{j-k+1} - x_{j-k})
///   y_{j+1} = y_j (1 + (n (1 - n) / B) y_j (x_j - x*)) - sum_k q_k (y_{j-k+1} - y_{j-k}) + f_j
/// Weights and coefficients are built once for the whole grid.
class NonlocalStepper {
 public:
  explicit NonlocalStepper(const Scenario& scenario);

  /// Computes level j+1 from xs[0..j], ys[0..j]. Spans must hold at least j+1
  /// entries.
  State step(std::span<const double> xs, std::span<const double> ys, std::size_t j) const;

  /// Number of memory terms used at level j.
  std::size_t memory_terms(std::size_t j) const noexcept;

  double coefficient_x() const noexcept { return A_; }
  double coefficient_y() const noexcept { return B_; }
  const MemoryWeights& weights_x() const noexcept { return p_; }
  const MemoryWeights& weights_y() const noexcept { return q_; }

 private:
  Scenario scenario_;
  double A_;
  double B_;
  MemoryWeights p_;
  MemoryWeights q_;
};

/// Runs the scheme over the whole grid. Throws BlowUpError on a non-finite
/// or runaway state and ConfigError when tabulated forcing is too short.
Trajectory simulate(const Scenario& scenario);

Trajectory simulate(const DubovskyParams& p, const FractionalOrders& orders,
                    const Forcing& f, const InitialConditions& ic, const GridSpec& grid,
                    const SchemeOptions& opts = {});

}  // namespace dubovsky
