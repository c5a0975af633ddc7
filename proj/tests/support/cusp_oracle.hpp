#pragma once

#include "foldcob/circle_diagram.hpp"

#include <vector>

namespace foldcob::testing {

/// Numeric model of the fibers of (x, y, z) -> (x, y^3 - x y + z^2) over the circle of
/// radius epsilon, restricted to the ball of radius delta. Fiber components are found by
/// marching cells on a grid and grouped with 8-connectivity.
struct OracleOptions {
  double epsilon = 0.04;
  double delta = 0.5;
  int grid = 160;
  int samples = 360;
  bool counterclockwise = true;
};

struct FiberComponents {
  std::vector<int> label;        // per cell, -1 when the cell misses the fiber
  std::vector<bool> touches_rim; // per component
  long circles = 0;
  long arcs = 0;
  long total() const { return circles + arcs; }
};

FiberComponents fiber_components(double theta, const OracleOptions& opt);

/// Diagram of the fibers over the circle, with the truncating sphere as boundary.
circle::CircleFiberDiagram boundary_diagram(const OracleOptions& opt);

/// Closes every fiber arc by a cylinder over the boundary: arcs become circles and
/// Ia events become I1 events.
circle::CircleFiberDiagram cap_boundary(const circle::CircleFiberDiagram& d);

}  // namespace foldcob::testing
