#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dubovsky/errors.hpp"
#include "dubovsky/presets.hpp"
#include "dubovsky/sim.hpp"
#include "oracles.hpp"

using namespace dubovsky;

namespace {

Scenario fig1_like(double T, std::size_t N) {
  Scenario s;
  s.grid = GridSpec(T, N);
  return s;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridSpec(0.0, 10), ConfigError);
  CHECK_THROWS_AS(GridSpec(-1.0, 10), ConfigError);
  CHECK_THROWS_AS(GridSpec(10.0, 1), ConfigError);
  CHECK_THROWS_AS(GridSpec::from_step(10.0, 0.0), ConfigError);
  CHECK_THROWS_AS(GridSpec::from_step(1.0, 0.7), ConfigError);
  const auto g = GridSpec::from_step(250.0, 0.05);
  CHECK(g.N() == 5000);
  CHECK(g.tau() == 250.0 / 5000.0);
  CHECK(GridSpec(1.0, 3).tau() == 1.0 / 3.0);
}

TEST_CASE("trajectory shape") {
  const auto traj = simulate(fig1_like(10.0, 200));
  CHECK(traj.size() == 201);
  CHECK(traj.times.size() == 201);
  CHECK(traj.ys.size() == 201);
  CHECK(traj.xs[0] == 1.35);
  CHECK(traj.ys[0] == 0.5);
  CHECK(traj.times[200] == doctest::Approx(10.0).epsilon(1e-14));
  REQUIRE(traj.scenario.has_value());
  CHECK(traj.scenario->grid.N() == 200);
}

TEST_CASE("equilibrium start stays fixed exactly") {
  for (double a : {1.0, 0.8, 0.35, 0.1}) {
    for (double b : {1.0, 0.6, 0.1}) {
      for (auto bound : {SumBound::as_paper, SumBound::full_history}) {
        Scenario s = fig1_like(20.0, 400);
        s.orders = {FractionalOrder(a), FractionalOrder(b)};
        s.ic = InitialConditions(1.3, 0.5);
        s.options.sum_bound = bound;
        const auto traj = simulate(s);
        CHECK(std::all_of(traj.xs.begin(), traj.xs.end(), [](double v) { return v == 1.3; }));
        CHECK(std::all_of(traj.ys.begin(), traj.ys.end(), [](double v) { return v == 0.5; }));
      }
    }
  }
}

TEST_CASE("integer orders reproduce forward Euler") {
  const double tau = 0.05;
  const std::size_t steps = 5000;
  const auto traj = simulate(fig1_like(250.0, steps));
  const auto euler = dubovsky::testing::forward_euler(0.2, 2.25, 1.3, 0.5, 1.35, 0.5, tau, steps,
                                                      [](double) { return 0.0; });
  double worst = 0.0;
  for (std::size_t j = 0; j <= steps; ++j) {
    worst = std::max({worst, std::abs(traj.xs[j] - euler.xs[j]), std::abs(traj.ys[j] - euler.ys[j])});
  }
  CHECK(worst <= 1e-13);

  SUBCASE("consistent forcing scale is Euler with tau * f") {
    Scenario s = fig1_like(50.0, 1000);
    s.forcing = Forcing::cosine(0.3, 1.7);
    s.options.forcing_scale = ForcingScale::consistent;
    const auto t = simulate(s);
    const auto e = dubovsky::testing::forward_euler(
        0.2, 2.25, 1.3, 0.5, 1.35, 0.5, s.grid.tau(), 1000,
        [](double time) { return 0.3 * std::cos(1.7 * time); });
    for (std::size_t j = 0; j <= 1000; ++j) {
      REQUIRE(std::abs(t.xs[j] - e.xs[j]) <= 1e-13);
      REQUIRE(std::abs(t.ys[j] - e.ys[j]) <= 1e-13);
    }
  }

  SUBCASE("default forcing scale adds f_j unscaled") {
    Scenario s = fig1_like(50.0, 1000);
    s.forcing = Forcing::cosine(0.01, 1.0);
    const double h = s.grid.tau();
    const auto t = simulate(s);
    const auto e = dubovsky::testing::forward_euler(
        0.2, 2.25, 1.3, 0.5, 1.35, 0.5, h, 1000,
        [h](double time) { return 0.01 * std::cos(time) / h; });
    for (std::size_t j = 0; j <= 1000; ++j) {
      REQUIRE(std::abs(t.xs[j] - e.xs[j]) <= 1e-12);
      REQUIRE(std::abs(t.ys[j] - e.ys[j]) <= 1e-12);
    }
  }
}

TEST_CASE("first step uses the dedicated formulas") {
  Scenario s = preset("fig4").scenario;
  s.ic = InitialConditions(1.42, 0.61);
  const NonlocalStepper stepper(s);
  const std::vector<double> xs{1.42};
  const std::vector<double> ys{0.61};
  const State next = stepper.step(xs, ys, 0);
  const double A = stepper.coefficient_x();
  const double B = stepper.coefficient_y();
  const double x1 = 1.42 * (1.0 - (2.25 * 0.2 / A) * (1.42 - 1.0) * (0.61 - 0.5));
  const double y1 = 0.61 * (1.0 + (0.2 * 0.8 / B) * 0.61 * (1.42 - 1.3)) + 0.5;  // f_0 = 0.5 cos 0
  CHECK(next.x == x1);
  CHECK(next.y == y1);
  CHECK(stepper.memory_terms(0) == 0);
  CHECK(stepper.memory_terms(1) == 0);
  CHECK(stepper.memory_terms(5) == 4);
}

TEST_CASE("full history adds exactly the oldest increment") {
  for (const char* name : {"fig3", "fig4", "fig6"}) {
    Scenario trimmed = preset(name).scenario;
    trimmed.grid = GridSpec(40.0, 800);
    Scenario full = trimmed;
    full.options.sum_bound = SumBound::full_history;
    const auto traj = simulate(trimmed);
    const NonlocalStepper sp(trimmed);
    const NonlocalStepper sf(full);
    CHECK(sf.memory_terms(5) == 5);
    const double dx0 = std::abs(traj.xs[1] - traj.xs[0]);
    const double dy0 = std::abs(traj.ys[1] - traj.ys[0]);
    for (std::size_t j = 1; j < 800; j += 7) {
      const auto a = sp.step(traj.xs, traj.ys, j);
      const auto b = sf.step(traj.xs, traj.ys, j);
      const double slack = 1e-12 * (1.0 + std::abs(a.x) + std::abs(a.y));
      REQUIRE(std::abs(a.x - b.x) <= sp.weights_x()[j] * dx0 + slack);
      REQUIRE(std::abs(a.y - b.y) <= sp.weights_y()[j] * dy0 + slack);
    }
  }
}

TEST_CASE("runs are bit-reproducible") {
  const auto s = preset("fig5").scenario;
  const auto a = simulate(s);
  const auto b = simulate(s);
  CHECK(a.xs == b.xs);
  CHECK(a.ys == b.ys);
}

TEST_CASE("blow-up is reported with context") {
  Scenario s = fig1_like(100.0, 100);
  s.ic = InitialConditions(50.0, 40.0);
  try {
    simulate(s);
    FAIL("expected blow-up");
  } catch (const BlowUpError& e) {
    CHECK(e.step() >= 1);
    CHECK(e.step() <= 100);
    CHECK(std::isfinite(e.last_x()));
    CHECK(std::isfinite(e.last_y()));
    CHECK(std::string(e.what()).find("step") != std::string::npos);
  }
}

TEST_CASE("tabulated forcing must cover the grid") {
  Scenario s = fig1_like(1.0, 10);
  s.forcing = Forcing::tabulated(std::vector<double>(10, 0.0));
  CHECK_THROWS_AS(simulate(s), ConfigError);
  s.forcing = Forcing::tabulated(std::vector<double>(11, 0.0));
  CHECK_NOTHROW(simulate(s));
}

TEST_CASE("fig1 orbit keeps its extent") {
  const auto traj = simulate(preset("fig1").scenario);
  const auto cycle = static_cast<std::ptrdiff_t>(75.0 / traj.scenario->grid.tau());
  const auto [e_lo, e_hi] = std::minmax_element(traj.xs.begin(), traj.xs.begin() + cycle);
  const auto [l_lo, l_hi] = std::minmax_element(traj.xs.end() - cycle, traj.xs.end());
  const double amplitude = *e_hi - *e_lo;
  CHECK(std::abs(*e_hi - *l_hi) <= 0.05 * amplitude);
  CHECK(std::abs(*e_lo - *l_lo) <= 0.05 * amplitude);
}
