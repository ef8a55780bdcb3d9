#include "heilbronn/point_set.hpp"

#include <cmath>

namespace heilbronn {

PointSetD to_float(const PointSetQ& ps) {
  Domain<double> dom;
  switch (ps.domain.kind) {
    case DomainKind::UnitSquare:
      dom = Domain<double>::unit_square();
      break;
    case DomainKind::Rectangle:
      dom = Domain<double>::rectangle(rat_to_double(ps.domain.d));
      break;
    case DomainKind::Region: {
      std::vector<PtD> verts;
      verts.reserve(ps.domain.region.size());
      for (const PtQ& v : ps.domain.region.vertices())
        verts.push_back({rat_to_double(v.x), rat_to_double(v.y)});
      dom.kind = DomainKind::Region;
      dom.region = ConvexRegionD::finalize(std::move(verts));
      break;
    }
  }
  std::vector<PtD> pts;
  pts.reserve(ps.points.size());
  for (const PtQ& p : ps.points) pts.push_back({rat_to_double(p.x), rat_to_double(p.y)});
  return make_point_set(std::move(pts), std::move(dom));
}

PointSetQ rationalize(const PointSetD& ps, std::int64_t den) {
  if (ps.domain.kind == DomainKind::Region)
    throw std::logic_error("rationalize requires an axis-aligned domain");
  Domain<Rat> dom = ps.domain.kind == DomainKind::UnitSquare
                        ? Domain<Rat>::unit_square()
                        : Domain<Rat>::rectangle(rat_from_rounded(ps.domain.width(), den));
  const Rat w = dom.width();
  const Rat h = dom.height();
  std::vector<PtQ> pts;
  pts.reserve(ps.points.size());
  for (const PtD& p : ps.points) {
    Rat x = rat_from_rounded(p.x, den);
    Rat y = rat_from_rounded(p.y, den);
    if (x < 0) x = 0;
    if (x > w) x = w;
    if (y < 0) y = 0;
    if (y > h) y = h;
    pts.push_back({std::move(x), std::move(y)});
  }
  return make_point_set(std::move(pts), std::move(dom));
}

PointSetD quantize_to_grid(const PointSetD& ps, std::int64_t den) {
  if (ps.domain.kind == DomainKind::Region)
    throw std::logic_error("quantize requires an axis-aligned domain");
  const double scale = static_cast<double>(den);
  const auto snap = [&](double v, double hi) {
    long long q = std::llround(v * scale);
    const long long q_hi = static_cast<long long>(std::floor(hi * scale));
    if (q < 0) q = 0;
    if (q > q_hi) q = q_hi;
    return static_cast<double>(q) / scale;
  };
  const double w = ps.domain.width();
  const double h = ps.domain.height();
  PointSetD out = ps;
  for (PtD& p : out.points) {
    p.x = snap(p.x, w);
    p.y = snap(p.y, h);
  }
  return out;
}

}  // namespace heilbronn
