#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

namespace dubovsky {

/// Constants of the Dubovsky long-wave model.
///   n       accumulation rate, 0 < n < 1
///   lambda  statistical coefficient, > 0
///   x_star  equilibrium efficiency of new technologies
///   y_star  equilibrium efficiency of return on assets
class DubovskyParams {
 public:
  DubovskyParams(double n, double lambda, double x_star, double y_star);

  double n() const noexcept { return n_; }
  double lambda() const noexcept { return lambda_; }
  double x_star() const noexcept { return x_star_; }
  double y_star() const noexcept { return y_star_; }

  friend bool operator==(const DubovskyParams&, const DubovskyParams&) = default;

 private:
  double n_;
  double lambda_;
  double x_star_;
  double y_star_;
};

struct InitialConditions {
  InitialConditions(double a, double b);

  double a;
  double b;

  friend bool operator==(const InitialConditions&, const InitialConditions&) = default;
};

/// External impact f(t) on the return-on-assets equation.
class Forcing {
 public:
  struct Zero {
    friend bool operator==(const Zero&, const Zero&) = default;
  };
  struct Cosine {
    double delta;
    double omega;
    friend bool operator==(const Cosine&, const Cosine&) = default;
  };
  /// One sample per grid node.
  struct Tabulated {
    std::vector<double> samples;
    friend bool operator==(const Tabulated&, const Tabulated&) = default;
  };

  Forcing() = default;

  static Forcing zero() { return Forcing(); }
  static Forcing cosine(double delta, double omega);
  static Forcing tabulated(std::vector<double> samples);

  /// f at time t; the tabulated variant reads samples[grid_index] instead.
  double at(double t, std::size_t grid_index) const;

  /// f at an arbitrary time. Tabulated samples are linearly interpolated on
  /// a grid of spacing tau.
  double at_time(double t, double tau) const;

  /// True when f is identically zero (zero variant or cosine with delta 0).
  bool vanishes() const noexcept;

  /// Throws ConfigError when a tabulated forcing has fewer samples than nodes.
  void check_covers(std::size_t node_count) const;

  std::string_view kind_name() const noexcept;
  const std::variant<Zero, Cosine, Tabulated>& variant() const noexcept { return v_; }

  friend bool operator==(const Forcing&, const Forcing&) = default;

 private:
  explicit Forcing(std::variant<Zero, Cosine, Tabulated> v) : v_(std::move(v)) {}

  std::variant<Zero, Cosine, Tabulated> v_;
};

/// Free function form of Forcing::at.
double forcing_eval(const Forcing& f, double t, std::size_t grid_index);

/// -lambda n x (x - 1)(y - y*)
double rhs_x(double x, double y, const DubovskyParams& p);

/// n (1 - n) y^2 (x - x*) + f
double rhs_y(double x, double y, const DubovskyParams& p, double f_value);

}  // namespace dubovsky
