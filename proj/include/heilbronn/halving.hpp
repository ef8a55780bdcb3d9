#pragma once

#include "heilbronn/geometry.hpp"

namespace heilbronn {

struct HalvingOptions {
  double eps_bisect = 1e-9;        // guaranteed relative area imbalance
  int max_iterations = 200;
  double angle_resolution = 1e-14; // bisection refines the angle this far
};

// An area-bisecting cut of a convex region through a prescribed anchor
// point. The anchor lies on the cut line by construction; both halves are
// closed, so the line belongs to each.
struct HalvingCut {
  PtD anchor;
  double angle = 0.0;  // direction of the cut line, in [0, pi)
  ConvexRegionD left;
  ConvexRegionD right;
  double left_area = 0.0;
  double right_area = 0.0;
};

// Finds a line through p splitting the region into two equal-area halves by
// bisecting on the rotation angle; the balance function g satisfies
// g(theta + pi) = area - g(theta), which pins a sign change on [0, pi].
// Deterministic for fixed inputs. Throws std::invalid_argument for a
// zero-area region or an anchor outside the region.
HalvingCut halving_line(const ConvexRegionD& region, const PtD& p,
                        const HalvingOptions& opts = {});

}  // namespace heilbronn
