#include "dubovsky/scheme.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "dubovsky/errors.hpp"

namespace dubovsky {

FractionalOrder::FractionalOrder(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0 || value > 1.0) {
    throw DomainError("fractional order must lie in (0, 1], got " +
                      std::to_string(value));
  }
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  // Series is evaluated for Gamma(z + 1) with z = x - 1.
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
         std::exp(-t) * sum;
}

}  // namespace

double gamma_eval(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("gamma_eval requires a finite positive argument");
  }
  if (x == 1.0 || x == 2.0) return 1.0;
  if (x < 0.5) return lanczos_gamma(x + 1.0) / x;
  return lanczos_gamma(x);
}

SchemeCoefficient scheme_coefficient(FractionalOrder order, double tau) {
  if (!std::isfinite(tau) || tau <= 0.0) {
    throw DomainError("time step must be finite and positive");
  }
  const double a = order.value();
  if (order.is_integer()) return {1.0 / tau};
  return {std::pow(tau, -a) / gamma_eval(2.0 - a)};
}

MemoryWeights::MemoryWeights(FractionalOrder order, std::size_t count)
    : order_(order), weights_(count, 0.0) {
  const double e = 1.0 - order.value();
  if (e == 0.0) return;
  // (1+k)^e - k^e written as k^e * expm1(e * log1p(1/k)) to avoid
  // cancellation at large k.
  for (std::size_t i = 0; i < count; ++i) {
    const double k = static_cast<double>(i + 1);
    weights_[i] = std::pow(k, e) * std::expm1(e * std::log1p(1.0 / k));
  }
}

MemoryWeights memory_weights(FractionalOrder order, std::size_t count) {
  return MemoryWeights(order, count);
}

}  // namespace dubovsky
