#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dubovsky {

/// Order of a Gerasimov-Caputo derivative, restricted to (0, 1].
/// The value 1 recovers the ordinary first derivative.
class FractionalOrder {
 public:
  explicit FractionalOrder(double value);

  double value() const noexcept { return value_; }
  bool is_integer() const noexcept { return value_ == 1.0; }

  friend bool operator==(const FractionalOrder&, const FractionalOrder&) = default;

 private:
  double value_;
};

/// Euler's gamma function for positive real arguments (Lanczos, g = 7).
/// Throws DomainError for x <= 0 or non-finite x.
double gamma_eval(double x);

/// Leading coefficient tau^{-order} / Gamma(2 - order) of the discrete
/// fractional derivative.
struct SchemeCoefficient {
  double value;
};

SchemeCoefficient scheme_coefficient(FractionalOrder order, double tau);

/// History weights w_k = (1+k)^{1-order} - k^{1-order}, k = 1..count.
class MemoryWeights {
 public:
  MemoryWeights(FractionalOrder order, std::size_t count);

  FractionalOrder order() const noexcept { return order_; }
  std::size_t size() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }

  /// 1-based, matching the k index of the scheme.
  double operator[](std::size_t k) const { return weights_[k - 1]; }

  /// Element i holds w_{i+1}.
  std::span<const double> values() const noexcept { return weights_; }

 private:
  FractionalOrder order_;
  std::vector<double> weights_;
};

MemoryWeights memory_weights(FractionalOrder order, std::size_t count);

}  // namespace dubovsky
