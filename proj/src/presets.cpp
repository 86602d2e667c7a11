#include "dubovsky/presets.hpp"

#include <array>
#include <string>

#include "dubovsky/errors.hpp"

namespace dubovsky {

namespace {

constexpr std::array<PresetInfo, 6> kPresets = {{
    {"fig1", "alpha=beta=1, no forcing (classical model, closed orbit)"},
    {"fig2", "alpha=beta=1, f=0.01 cos(t) (investment cycle on the long wave)"},
    {"fig3", "alpha=0.8, beta=1, no forcing (damped, stable focus)"},
    {"fig4", "alpha=0.8, beta=0.6, f=0.5 cos(2t) (growth into a limit cycle)"},
    {"fig5", "alpha=beta=0.8, f=0.5 cos(2t) (limit cycle)"},
    {"fig6", "alpha=beta=0.1, f=0.5 cos(2t) (limit cycle)"},
}};

constexpr double kDefaultT = 250.0;
constexpr std::size_t kDefaultN = 5000;  // tau = 0.05

}  // namespace

std::span<const PresetInfo> preset_catalog() { return kPresets; }

ScenarioConfig preset(std::string_view name) {
  struct Setting {
    double alpha;
    double beta;
    double delta;
    double omega;
  };
  Setting s{};
  if (name == "fig1") {
    s = {1.0, 1.0, 0.0, 0.0};
  } else if (name == "fig2") {
    s = {1.0, 1.0, 0.01, 1.0};
  } else if (name == "fig3") {
    s = {0.8, 1.0, 0.0, 0.0};
  } else if (name == "fig4") {
    s = {0.8, 0.6, 0.5, 2.0};
  } else if (name == "fig5") {
    s = {0.8, 0.8, 0.5, 2.0};
  } else if (name == "fig6") {
    s = {0.1, 0.1, 0.5, 2.0};
  } else {
    std::string valid;
    for (const auto& p : kPresets) {
      if (!valid.empty()) valid += ", ";
      valid += p.name;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'; valid presets: " + valid);
  }

  ScenarioConfig cfg;
  cfg.name = std::string(name);
  cfg.preset = std::string(name);
  cfg.scenario.params = DubovskyParams(0.2, 2.25, 1.3, 0.5);
  cfg.scenario.orders = {FractionalOrder(s.alpha), FractionalOrder(s.beta)};
  cfg.scenario.forcing = s.delta > 0.0 ? Forcing::cosine(s.delta, s.omega) : Forcing::zero();
  cfg.scenario.ic = InitialConditions(1.35, 0.5);
  cfg.scenario.grid = GridSpec(kDefaultT, kDefaultN);
  return cfg;
}

}  // namespace dubovsky
