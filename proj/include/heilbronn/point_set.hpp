#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "heilbronn/geometry.hpp"

namespace heilbronn {

enum class DomainKind { UnitSquare, Rectangle, Region };

// Unit-area carrier the points live in: the unit square, the rectangle
// [0,d] x [0,1/d] with 0 < d <= 1, or an arbitrary convex region of unit
// area.
template <class T>
struct Domain {
  DomainKind kind = DomainKind::UnitSquare;
  T d = T(1);              // aspect, Rectangle only
  ConvexRegion<T> region;  // Region only

  static Domain unit_square() { return {}; }

  static Domain rectangle(T aspect) {
    if (!(aspect > 0 && aspect <= 1))
      throw std::invalid_argument("aspect d must satisfy 0 < d <= 1");
    Domain dom;
    dom.kind = DomainKind::Rectangle;
    dom.d = std::move(aspect);
    return dom;
  }

  static Domain convex_region(ConvexRegion<T> r) {
    if constexpr (std::is_same_v<T, double>) {
      if (std::abs(r.area() - 1.0) > 1e-9)
        throw std::invalid_argument("region domain must have unit area");
    } else {
      if (r.area() != 1) throw std::invalid_argument("region domain must have unit area");
    }
    Domain dom;
    dom.kind = DomainKind::Region;
    dom.region = std::move(r);
    return dom;
  }

  T width() const {
    if (kind == DomainKind::Region) throw std::logic_error("region domain has no aspect");
    return kind == DomainKind::UnitSquare ? T(1) : d;
  }
  T height() const {
    if (kind == DomainKind::Region) throw std::logic_error("region domain has no aspect");
    return kind == DomainKind::UnitSquare ? T(1) : T(T(1) / d);
  }

  ConvexRegion<T> outline() const {
    if (kind == DomainKind::Region) return region;
    return ConvexRegion<T>::axis_rectangle({T(0), T(0)}, {width(), height()});
  }

  bool contains(const Pt<T>& p, double slack = kContainSlack) const {
    if (kind == DomainKind::Region) return region.contains(p, slack);
    const T w = width(), h = height();
    if constexpr (std::is_same_v<T, double>) {
      return p.x >= -slack && p.x <= w + slack && p.y >= -slack && p.y <= h + slack;
    } else {
      (void)slack;
      return p.x >= 0 && p.x <= w && p.y >= 0 && p.y <= h;
    }
  }
};

template <class T>
struct PointSet {
  std::vector<Pt<T>> points;
  Domain<T> domain;

  int size() const { return static_cast<int>(points.size()); }
};

using PointSetD = PointSet<double>;
using PointSetQ = PointSet<Rat>;

// Validating constructor: every point must lie in the closed domain, and be
// finite in float mode.
template <class T>
PointSet<T> make_point_set(std::vector<Pt<T>> points, Domain<T> domain) {
  for (const Pt<T>& p : points) {
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::invalid_argument("point coordinates must be finite");
    }
    if (!domain.contains(p)) throw std::invalid_argument("point outside domain");
  }
  PointSet<T> ps;
  ps.points = std::move(points);
  ps.domain = std::move(domain);
  return ps;
}

PointSetD to_float(const PointSetQ& ps);

// Rounds every coordinate to the nearest multiple of 1/den and clamps the
// result into the exact domain.
PointSetQ rationalize(const PointSetD& ps, std::int64_t den = 1'000'000);

// Float-side counterpart of rationalize: snaps coordinates onto the same
// 1/den lattice (restricted to the domain) so that a subsequent rationalize
// is exact up to one ulp per coordinate.
PointSetD quantize_to_grid(const PointSetD& ps, std::int64_t den = 1'000'000);

}  // namespace heilbronn
