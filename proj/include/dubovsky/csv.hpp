#pragma once

#include <string>
#include <string_view>

#include "dubovsky/sim.hpp"

namespace dubovsky {

/// `t,x,y` header, one LF-terminated row per node, shortest round-trip digits.
std::string format_csv(const Trajectory& traj);
void write_csv(const Trajectory& traj, const std::string& path);

/// Inverse of format_csv. The result carries no scenario.
Trajectory parse_csv(std::string_view text);
Trajectory read_csv(const std::string& path);

}  // namespace dubovsky
