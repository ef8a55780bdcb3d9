#include "heilbronn/halving.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heilbronn {

namespace {

HalvingCut build_cut(const ConvexRegionD& region, const PtD& p, double theta) {
  HalvingCut cut;
  cut.anchor = p;
  if (theta >= std::numbers::pi) theta -= std::numbers::pi;
  cut.angle = theta;
  const Line<double> line = line_from_angle(p, theta);
  cut.left = clip_halfplane(region, line, Side::Left);
  cut.right = clip_halfplane(region, line, Side::Right);
  cut.left_area = cut.left.area();
  cut.right_area = cut.right.area();
  return cut;
}

}  // namespace

HalvingCut halving_line(const ConvexRegionD& region, const PtD& p, const HalvingOptions& opts) {
  const double total = region.area();
  if (!(total > 0.0)) throw std::invalid_argument("degenerate region");
  if (!region.contains(p)) throw std::invalid_argument("anchor outside region");

  const double half = total / 2.0;
  const auto imbalance = [&](double theta) {
    return clip_halfplane(region, line_from_angle(p, theta), Side::Left).area() - half;
  };

  double best_theta = 0.0;
  double best_err = imbalance(0.0);
  const double exact_hit = 1e-16 * total;

  if (std::abs(best_err) > exact_hit) {
    // h(0) and h(pi) have opposite signs since the halves swap; bisect.
    const bool low_positive = best_err > 0.0;
    double lo = 0.0, hi = std::numbers::pi;
    for (int it = 0; it < opts.max_iterations && (hi - lo) > opts.angle_resolution; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double err = imbalance(mid);
      if (std::abs(err) < std::abs(best_err)) {
        best_err = err;
        best_theta = mid;
      }
      if (std::abs(err) <= exact_hit) break;
      if ((err > 0.0) == low_positive) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }

  HalvingCut cut = build_cut(region, p, best_theta);
  if (std::abs(cut.left_area - half) > 0.5 * opts.eps_bisect * total)
    throw std::runtime_error("halving bisection failed to converge");
  return cut;
}

}  // namespace heilbronn
