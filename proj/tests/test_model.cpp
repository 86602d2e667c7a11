#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dubovsky/errors.hpp"
#include "dubovsky/model.hpp"

using namespace dubovsky;

namespace {
const DubovskyParams kBaseline(0.2, 2.25, 1.3, 0.5);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(DubovskyParams(1.5, 2.25, 1.3, 0.5), "n must lie in (0,1)", ConfigError);
  CHECK_THROWS_AS(DubovskyParams(0.0, 2.25, 1.3, 0.5), ConfigError);
  CHECK_THROWS_AS(DubovskyParams(1.0, 2.25, 1.3, 0.5), ConfigError);
  CHECK_THROWS_AS(DubovskyParams(0.2, 0.0, 1.3, 0.5), ConfigError);
  CHECK_THROWS_AS(DubovskyParams(0.2, 2.25, NAN, 0.5), ConfigError);
  CHECK_THROWS_AS(InitialConditions(INFINITY, 0.5), ConfigError);
  CHECK_THROWS_AS(Forcing::cosine(-0.1, 1.0), ConfigError);
  CHECK_THROWS_AS(Forcing::cosine(0.1, 0.0), ConfigError);
}

TEST_CASE("rhs values") {
  CHECK(rhs_x(1.35, 0.5, kBaseline) == 0.0);
  CHECK(rhs_x(1.0, 0.7, kBaseline) == 0.0);
  // -2.25 * 0.2 * 1.35 * 0.35 * 0.1
  CHECK(rhs_x(1.35, 0.6, kBaseline) == doctest::Approx(-0.0212625).epsilon(1e-13));

  CHECK(rhs_y(1.3, 0.5, kBaseline, 0.0) == 0.0);
  CHECK(rhs_y(1.3, 0.5, kBaseline, 0.01) == 0.01);
  // 0.2 * 0.8 * 0.25 * 0.05
  CHECK(rhs_y(1.35, 0.5, kBaseline, 0.0) == doctest::Approx(0.002).epsilon(1e-13));

  CHECK_THROWS_AS(rhs_x(NAN, 0.5, kBaseline), DomainError);
  CHECK_THROWS_AS(rhs_y(1.0, INFINITY, kBaseline, 0.0), DomainError);
  CHECK_THROWS_AS(rhs_y(1.0, 0.5, kBaseline, NAN), DomainError);
}

TEST_CASE("equilibrium annihilation and sign structure") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    CHECK(rhs_x(u(rng), kBaseline.y_star(), kBaseline) == 0.0);
    CHECK(rhs_y(kBaseline.x_star(), u(rng), kBaseline, 0.0) == 0.0);
  }
  for (int i = 1; i < 20; ++i) {
    for (int k = 1; k <= 20; ++k) {
      const double x = i / 20.0;
      const double y = kBaseline.y_star() + k * 0.05;
      CHECK(rhs_x(x, y, kBaseline) > 0.0);
    }
  }
}

TEST_CASE("forcing evaluation") {
  CHECK(forcing_eval(Forcing::zero(), 17.3, 0) == 0.0);
  CHECK(forcing_eval(Forcing::cosine(0.01, 1.0), 0.0, 0) == 0.01);
  CHECK(std::abs(forcing_eval(Forcing::cosine(0.5, 2.0), std::numbers::pi / 4, 0)) < 1e-16);

  const auto tab = Forcing::tabulated({0.5, -0.25, 1.0});
  CHECK(tab.at(123.0, 1) == -0.25);
  CHECK_THROWS_AS(tab.at(0.0, 3), ConfigError);
  CHECK_THROWS_AS(tab.check_covers(4), ConfigError);
  CHECK_NOTHROW(tab.check_covers(3));
  CHECK(tab.at_time(0.5, 1.0) == doctest::Approx(0.125));

  CHECK(Forcing::zero().vanishes());
  CHECK(Forcing::cosine(0.0, 1.0).vanishes());
  CHECK_FALSE(Forcing::cosine(0.5, 2.0).vanishes());
  CHECK(Forcing::cosine(0.5, 2.0).kind_name() == "cosine");
}

TEST_CASE("cosine forcing is periodic") {
  const double delta = 0.5;
  const double omega = 2.0;
  const auto f = Forcing::cosine(delta, omega);
  const double period = 2.0 * std::numbers::pi / omega;
  for (int i = 0; i < 100; ++i) {
    const double t = 0.37 * i;
    CHECK(std::abs(f.at(t, 0) - f.at(t + period, 0)) <= 1e-12 * delta);
  }
}
