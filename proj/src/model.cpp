#include "dubovsky/model.hpp"

#include <cmath>
#include <string>

#include "dubovsky/errors.hpp"

namespace dubovsky {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be finite");
  }
}

}  // namespace

DubovskyParams::DubovskyParams(double n, double lambda, double x_star, double y_star)
    : n_(n), lambda_(lambda), x_star_(x_star), y_star_(y_star) {
  require_finite(n, "n");
  require_finite(lambda, "lambda");
  require_finite(x_star, "x_star");
  require_finite(y_star, "y_star");
  if (!(n > 0.0 && n < 1.0)) throw ConfigError("n must lie in (0,1)");
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
}

InitialConditions::InitialConditions(double a_, double b_) : a(a_), b(b_) {
  require_finite(a, "a");
  require_finite(b, "b");
}

Forcing Forcing::cosine(double delta, double omega) {
  require_finite(delta, "forcing.delta");
  require_finite(omega, "forcing.omega");
  if (delta < 0.0) throw ConfigError("forcing.delta must be non-negative");
  if (!(omega > 0.0)) throw ConfigError("forcing.omega must be positive");
  return Forcing(Cosine{delta, omega});
}

Forcing Forcing::tabulated(std::vector<double> samples) {
  for (double s : samples) require_finite(s, "forcing sample");
  return Forcing(Tabulated{std::move(samples)});
}

double Forcing::at(double t, std::size_t grid_index) const {
  if (const auto* c = std::get_if<Cosine>(&v_)) {
    return c->delta * std::cos(c->omega * t);
  }
  if (const auto* tab = std::get_if<Tabulated>(&v_)) {
    if (grid_index >= tab->samples.size()) {
      throw ConfigError("tabulated forcing has no sample for grid node " +
                        std::to_string(grid_index));
    }
    return tab->samples[grid_index];
  }
  return 0.0;
}

double Forcing::at_time(double t, double tau) const {
  if (const auto* tab = std::get_if<Tabulated>(&v_)) {
    if (tab->samples.empty()) throw ConfigError("tabulated forcing is empty");
    const double pos = t / tau;
    const auto last = tab->samples.size() - 1;
    if (pos <= 0.0) return tab->samples.front();
    if (pos >= static_cast<double>(last)) {
      if (pos > static_cast<double>(last) + 1e-9) {
        throw ConfigError("tabulated forcing does not cover t = " + std::to_string(t));
      }
      return tab->samples.back();
    }
    const auto i = static_cast<std::size_t>(pos);
    const double w = pos - static_cast<double>(i);
    return (1.0 - w) * tab->samples[i] + w * tab->samples[i + 1];
  }
  return at(t, 0);
}

bool Forcing::vanishes() const noexcept {
  if (std::holds_alternative<Zero>(v_)) return true;
  if (const auto* c = std::get_if<Cosine>(&v_)) return c->delta == 0.0;
  return false;
}

void Forcing::check_covers(std::size_t node_count) const {
  if (const auto* tab = std::get_if<Tabulated>(&v_)) {
    if (tab->samples.size() < node_count) {
      throw ConfigError("tabulated forcing has " + std::to_string(tab->samples.size()) +
                        " samples but the grid has " + std::to_string(node_count) +
                        " nodes");
    }
  }
}

std::string_view Forcing::kind_name() const noexcept {
  switch (v_.index()) {
    case 1:
      return "cosine";
    case 2:
      return "tabulated";
    default:
      return "zero";
  }
}

double forcing_eval(const Forcing& f, double t, std::size_t grid_index) {
  return f.at(t, grid_index);
}

double rhs_x(double x, double y, const DubovskyParams& p) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("rhs_x: non-finite state");
  }
  return -p.lambda() * p.n() * x * (x - 1.0) * (y - p.y_star());
}

double rhs_y(double x, double y, const DubovskyParams& p, double f_value) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(f_value)) {
    throw DomainError("rhs_y: non-finite input");
  }
  return p.n() * (1.0 - p.n()) * y * y * (x - p.x_star()) + f_value;
}

}  // namespace dubovsky
