#pragma once

#include <span>
#include <string_view>

#include "dubovsky/config.hpp"

namespace dubovsky {

struct PresetInfo {
  std::string_view name;
  std::string_view summary;
};

std::span<const PresetInfo> preset_catalog();

/// Published scenarios fig1..fig6 on the default grid (T = 250, tau = 0.05).
/// Unknown names raise ConfigError listing the valid ones.
ScenarioConfig preset(std::string_view name);

}  // namespace dubovsky
