#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dubovsky/sim.hpp"

namespace dubovsky {

struct PlotSpec {
  enum class Kind {
    oscillogram,  // x(t) and y(t) on shared axes
    phase,        // y against x
  };
  using Range = std::pair<double, double>;

  Kind kind = Kind::phase;
  int width = 640;
  int height = 480;
  /// Explicit axis ranges; automatic when empty.
  std::optional<Range> horizontal;
  std::optional<Range> vertical;
};

/// Standalone SVG document. Throws DomainError for a trajectory with fewer than
/// two nodes or for non-positive dimensions.
std::string render_svg(const Trajectory& traj, const PlotSpec& spec);

void render_plot(const Trajectory& traj, const PlotSpec& spec, const std::string& path);

}  // namespace dubovsky
