#pragma once

#include <string>
#include <vector>

#include "choquet/space.hpp"

namespace choquet {

/// A highlighted subset of the points, drawn as a colored ring.
struct Overlay {
  std::string name;
  PointSet points;
};

struct PlotOptions {
  /// Basis rows to use as x and y. Empty: stored coords, else the first two
  /// non-constant basis rows. More than two is an InputError.
  std::vector<std::size_t> axes;
  int width = 480;
  int height = 480;
  /// Point labels are drawn only up to this many points.
  std::size_t max_labels = 40;
};

/// Deterministic SVG of the 2-D projection of the embedded points.
std::string plot_svg(const FunctionSystem& sys, const std::vector<Overlay>& overlays,
                     const PlotOptions& options = {});

}  // namespace choquet
