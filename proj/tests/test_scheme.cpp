#include <doctest.h>

#include <cmath>
#include <random>

#include "dubovsky/errors.hpp"
#include "dubovsky/scheme.hpp"
#include "oracles.hpp"

using namespace dubovsky;
using dubovsky::testing::gamma_stirling;

TEST_CASE("fractional order domain") {
  CHECK_NOTHROW(FractionalOrder(1.0));
  CHECK_NOTHROW(FractionalOrder(1e-6));
  CHECK_THROWS_AS(FractionalOrder(0.0), DomainError);
  CHECK_THROWS_AS(FractionalOrder(1.0000001), DomainError);
  CHECK_THROWS_AS(FractionalOrder(std::nan("")), DomainError);
  CHECK(FractionalOrder(1.0).is_integer());
  CHECK_FALSE(FractionalOrder(0.99).is_integer());
}

TEST_CASE("gamma_eval fixed values") {
  CHECK(gamma_eval(1.0) == 1.0);
  CHECK(gamma_eval(2.0) == 1.0);
  // Stirling oracle and mpmath both give 0.918168742399760622...
  CHECK(gamma_stirling(1.2) == doctest::Approx(0.91816874239976062).epsilon(1e-15));
  CHECK(gamma_eval(1.2) == doctest::Approx(0.91816874239976062).epsilon(1e-13));
  CHECK(gamma_eval(0.5) == doctest::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-13));
  CHECK(gamma_eval(5.0) == doctest::Approx(24.0).epsilon(1e-13));
}

TEST_CASE("gamma_eval rejects non-positive arguments") {
  CHECK_THROWS_AS(gamma_eval(0.0), DomainError);
  CHECK_THROWS_AS(gamma_eval(-1.5), DomainError);
  CHECK_THROWS_AS(gamma_eval(INFINITY), DomainError);
  CHECK_THROWS_AS(gamma_eval(std::nan("")), DomainError);
}

TEST_CASE("gamma_eval matches the Stirling oracle and the recurrence on (1, 2]") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(1.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    const double g = gamma_eval(x);
    CHECK(std::abs(g - gamma_stirling(x)) <= 1e-12 * std::abs(gamma_stirling(x)));
    // Gamma(x + 1) = x Gamma(x)
    CHECK(std::abs(gamma_eval(x + 1.0) - x * g) <= 1e-12 * x * g);
    // and downwards into (0, 1)
    CHECK(std::abs(gamma_eval(x - 0.5) * (x - 0.5) - gamma_eval(x + 0.5)) <=
          1e-12 * gamma_eval(x + 0.5));
  }
}

TEST_CASE("scheme coefficient") {
  CHECK(scheme_coefficient(FractionalOrder(1.0), 0.1).value == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(scheme_coefficient(FractionalOrder(1.0), 0.5).value == 2.0);
  // 10^0.8 / Gamma(1.2) = 6.87191052519495802... (Stirling oracle, mpmath agrees)
  const double oracle = std::pow(10.0, 0.8) / gamma_stirling(1.2);
  CHECK(oracle == doctest::Approx(6.871910525194958).epsilon(1e-14));
  CHECK(scheme_coefficient(FractionalOrder(0.8), 0.1).value ==
        doctest::Approx(6.871910525194958).epsilon(1e-12));
  CHECK_THROWS_AS(scheme_coefficient(FractionalOrder(0.5), 0.0), DomainError);
  CHECK_THROWS_AS(scheme_coefficient(FractionalOrder(0.5), -0.1), DomainError);

  for (double a : {0.05, 0.3, 0.7, 0.99, 1.0}) {
    for (double tau : {1e-4, 0.05, 1.0, 7.5}) {
      CHECK(scheme_coefficient(FractionalOrder(a), tau).value > 0.0);
    }
  }
}

TEST_CASE("memory weights closed form") {
  const auto empty = memory_weights(FractionalOrder(0.5), 0);
  CHECK(empty.empty());

  const auto one = memory_weights(FractionalOrder(0.5), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[1] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));

  const auto integer = memory_weights(FractionalOrder(1.0), 100);
  for (double w : integer.values()) CHECK(w == 0.0);

  // 4^0.2 - 1 = 0.31950791077289428 (mpmath)
  const auto w = memory_weights(FractionalOrder(0.8), 3);
  double naive = 0.0;
  for (int k = 1; k <= 3; ++k) naive += std::pow(1.0 + k, 0.2) - std::pow(double(k), 0.2);
  CHECK(w[1] + w[2] + w[3] == doctest::Approx(0.31950791077289428).epsilon(1e-14));
  CHECK(w[1] + w[2] + w[3] == doctest::Approx(naive).epsilon(1e-14));
}

TEST_CASE("memory weights: telescoping, monotonicity, range") {
  for (double a : {0.1, 0.5, 0.8, 0.99}) {
    const std::size_t count = 10000;
    const auto w = memory_weights(FractionalOrder(a), count);
    CHECK(w[1] == doctest::Approx(std::pow(2.0, 1.0 - a) - 1.0).epsilon(1e-14));
    double sum = 0.0;
    for (std::size_t m = 1; m <= count; ++m) {
      sum += w[m];
      const double closed = std::pow(1.0 + double(m), 1.0 - a) - 1.0;
      REQUIRE(std::abs(sum - closed) <= 1e-12 * double(m));
      REQUIRE(w[m] >= 0.0);
      REQUIRE(w[m] < 1.0);
      if (m > 1) REQUIRE(w[m] < w[m - 1]);
    }
  }
}
