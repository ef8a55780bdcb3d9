#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "heilbronn/rational.hpp"

namespace heilbronn {

template <class T>
struct Pt {
  T x{};
  T y{};
  friend bool operator==(const Pt&, const Pt&) = default;
};

using PtD = Pt<double>;
using PtQ = Pt<Rat>;

template <class T>
bool lex_less(const Pt<T>& a, const Pt<T>& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Cross product (b-a) x (c-a), twice the signed triangle area.
template <class T>
T cross(const Pt<T>& a, const Pt<T>& b, const Pt<T>& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline constexpr double kOrientEps = 1e-12;     // relative collinearity threshold
inline constexpr double kContainSlack = 1e-12;  // closed-containment slack, float mode

// Orientation of the triple (a,b,c): +1 counter-clockwise, -1 clockwise,
// 0 collinear. The double overload calls the cross product zero when it is
// small relative to the magnitude of its two terms; rationals use the exact
// sign.
inline int orient(const PtD& a, const PtD& b, const PtD& c) {
  const double t1 = (b.x - a.x) * (c.y - a.y);
  const double t2 = (b.y - a.y) * (c.x - a.x);
  const double d = t1 - t2;
  if (std::abs(d) <= kOrientEps * std::max(std::abs(t1), std::abs(t2))) return 0;
  return d > 0 ? 1 : -1;
}

inline int orient(const PtQ& a, const PtQ& b, const PtQ& c) {
  const Rat d = cross(a, b, c);
  if (d == 0) return 0;
  return d > 0 ? 1 : -1;
}

inline double distance(const PtD& a, const PtD& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

// Directed line through `anchor`. For exact work the direction must be
// rational; angle-based construction is float-only (see line_from_angle).
template <class T>
struct Line {
  Pt<T> anchor;
  Pt<T> dir;
};

inline Line<double> line_from_angle(const PtD& anchor, double theta) {
  return {anchor, {std::cos(theta), std::sin(theta)}};
}

inline double line_point_distance(const Line<double>& line, const PtD& q) {
  const double len = std::hypot(line.dir.x, line.dir.y);
  const double c = line.dir.x * (q.y - line.anchor.y) - line.dir.y * (q.x - line.anchor.x);
  return std::abs(c) / len;
}

// Side of a directed line. Left is the half-plane the +90-degree normal of
// the direction points into: {q : cross(dir, q - anchor) >= 0}. Both halves
// are closed; the line belongs to each.
enum class Side { Left, Right };

// Convex polygon held as a counter-clockwise vertex cycle starting from the
// lexicographically least vertex, no duplicate and no exactly collinear
// consecutive vertices. Empty, single-point and segment regions are valid
// degenerate forms with area zero.
template <class T>
class ConvexRegion {
 public:
  ConvexRegion() = default;

  // Convex hull of an arbitrary point list. Throws on an empty input.
  static ConvexRegion hull_of(std::span<const Pt<T>> pts);
  static ConvexRegion hull_of(const std::vector<Pt<T>>& pts) {
    return hull_of(std::span<const Pt<T>>(pts));
  }

  // Builds from vertices already in CCW order; canonicalizes and validates
  // convexity. Throws std::invalid_argument if the chain is not convex CCW.
  static ConvexRegion from_ccw(std::vector<Pt<T>> verts);

  static ConvexRegion axis_rectangle(const Pt<T>& lo, const Pt<T>& hi) {
    return finalize({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
  }

  const std::vector<Pt<T>>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }
  bool degenerate() const { return verts_.size() < 3; }
  const T& area() const { return area_; }

  // Closed containment. The slack is a euclidean distance tolerance and is
  // ignored in exact mode.
  bool contains(const Pt<T>& q, double slack = kContainSlack) const;

  friend bool operator==(const ConvexRegion& a, const ConvexRegion& b) {
    return a.verts_ == b.verts_;
  }

  // Canonicalizes a trusted CCW chain without convexity checks: merges
  // duplicate consecutive vertices, drops exactly collinear middles,
  // collapses zero-area chains to their extreme points and rotates the cycle
  // to start at the lexicographic minimum.
  static ConvexRegion finalize(std::vector<Pt<T>> verts);

 private:
  static T shoelace_twice(const std::vector<Pt<T>>& v);

  std::vector<Pt<T>> verts_;
  T area_{};
};

using ConvexRegionD = ConvexRegion<double>;
using ConvexRegionQ = ConvexRegion<Rat>;

template <class T>
ConvexRegion<T> clip_halfplane(const ConvexRegion<T>& region, const Line<T>& line, Side side);

namespace detail {

// 2x hull area of the m points in p[], scratch arrays caller-provided.
// p is reordered. Exact-sign turns in rational mode; the epsilon orientation
// predicate in float mode so that enumeration and hull construction agree.
template <class T>
T twice_hull_area(Pt<T>* p, int m, Pt<T>* chain) {
  if (m < 3) return T{};
  // insertion sort by (x, y); m is small everywhere this is used
  for (int i = 1; i < m; ++i) {
    Pt<T> key = p[i];
    int j = i - 1;
    while (j >= 0 && lex_less(key, p[j])) {
      p[j + 1] = p[j];
      --j;
    }
    p[j + 1] = key;
  }
  int h = 0;
  for (int i = 0; i < m; ++i) {
    while (h >= 2 && orient(chain[h - 2], chain[h - 1], p[i]) <= 0) --h;
    chain[h++] = p[i];
  }
  const int lower = h + 1;
  for (int i = m - 2; i >= 0; --i) {
    while (h >= lower && orient(chain[h - 2], chain[h - 1], p[i]) <= 0) --h;
    chain[h++] = p[i];
  }
  --h;  // last vertex repeats the first
  if (h < 3) return T{};
  T sum{};
  for (int i = 0; i < h; ++i) {
    const Pt<T>& a = chain[i];
    const Pt<T>& b = chain[(i + 1) % h];
    sum += a.x * b.y - b.x * a.y;
  }
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(sum);
  } else {
    return sum < 0 ? T(-sum) : sum;
  }
}

inline double point_segment_distance(const PtD& a, const PtD& b, const PtD& q) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return distance(a, q);
  double t = ((q.x - a.x) * vx + (q.y - a.y) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance({a.x + t * vx, a.y + t * vy}, q);
}

inline bool on_segment_exact(const PtQ& a, const PtQ& b, const PtQ& q) {
  if (cross(a, b, q) != 0) return false;
  const Rat dot = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
  const Rat len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return dot >= 0 && dot <= len2;
}

}  // namespace detail

template <class T>
T ConvexRegion<T>::shoelace_twice(const std::vector<Pt<T>>& v) {
  T sum{};
  const std::size_t n = v.size();
  if (n < 3) return sum;
  for (std::size_t i = 0; i < n; ++i) {
    const Pt<T>& a = v[i];
    const Pt<T>& b = v[(i + 1) % n];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

template <class T>
ConvexRegion<T> ConvexRegion<T>::finalize(std::vector<Pt<T>> verts) {
  // merge consecutive duplicates around the cycle
  std::vector<Pt<T>> v;
  v.reserve(verts.size());
  for (const Pt<T>& p : verts) {
    if (v.empty() || !(v.back() == p)) v.push_back(p);
  }
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();

  if (v.size() >= 3) {
    // drop exactly collinear middle vertices; removal never changes the area
    bool changed = true;
    while (changed && v.size() >= 3) {
      changed = false;
      for (std::size_t i = 0; i < v.size();) {
        const std::size_t n = v.size();
        const Pt<T>& prev = v[(i + n - 1) % n];
        const Pt<T>& next = v[(i + 1) % n];
        if (cross(prev, v[i], next) == 0) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        } else {
          ++i;
        }
      }
    }
  }

  ConvexRegion out;
  if (v.size() >= 3) {
    T twice = shoelace_twice(v);
    if (twice == 0) {
      // fully collinear chain: keep the extreme endpoints
      auto [lo, hi] = std::minmax_element(v.begin(), v.end(),
                                          [](const Pt<T>& a, const Pt<T>& b) { return lex_less(a, b); });
      Pt<T> a = *lo, b = *hi;
      v = (a == b) ? std::vector<Pt<T>>{a} : std::vector<Pt<T>>{a, b};
    }
  }
  if (v.size() >= 2) {
    auto lo = std::min_element(v.begin(), v.end(),
                               [](const Pt<T>& a, const Pt<T>& b) { return lex_less(a, b); });
    std::rotate(v.begin(), lo, v.end());
  }
  out.verts_ = std::move(v);
  T twice = shoelace_twice(out.verts_);
  if constexpr (std::is_same_v<T, double>) {
    out.area_ = std::abs(twice) / 2.0;
  } else {
    out.area_ = (twice < 0 ? T(-twice) : twice) / 2;
  }
  return out;
}

template <class T>
ConvexRegion<T> ConvexRegion<T>::hull_of(std::span<const Pt<T>> pts) {
  if (pts.empty()) throw std::invalid_argument("empty point list");
  std::vector<Pt<T>> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), [](const Pt<T>& a, const Pt<T>& b) { return lex_less(a, b); });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const std::size_t n = p.size();
  if (n <= 2) return finalize(std::move(p));

  std::vector<Pt<T>> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);  // the closing vertex repeats the start
  return finalize(std::move(h));
}

template <class T>
ConvexRegion<T> ConvexRegion<T>::from_ccw(std::vector<Pt<T>> verts) {
  ConvexRegion r = finalize(std::move(verts));
  const auto& v = r.vertices();
  const std::size_t n = v.size();
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      if (orient(v[i], v[(i + 1) % n], v[(i + 2) % n]) < 0)
        throw std::invalid_argument("vertices are not in convex counter-clockwise order");
    }
  }
  return r;
}

template <class T>
bool ConvexRegion<T>::contains(const Pt<T>& q, double slack) const {
  const std::size_t n = verts_.size();
  if (n == 0) return false;
  if constexpr (std::is_same_v<T, double>) {
    if (n == 1) return distance(verts_[0], q) <= slack;
    if (n == 2) return detail::point_segment_distance(verts_[0], verts_[1], q) <= slack;
    for (std::size_t i = 0; i < n; ++i) {
      const Pt<T>& a = verts_[i];
      const Pt<T>& b = verts_[(i + 1) % n];
      const double len = distance(a, b);
      if (cross(a, b, q) < -slack * len) return false;
    }
    return true;
  } else {
    (void)slack;
    if (n == 1) return verts_[0] == q;
    if (n == 2) return detail::on_segment_exact(verts_[0], verts_[1], q);
    for (std::size_t i = 0; i < n; ++i) {
      if (cross(verts_[i], verts_[(i + 1) % n], q) < 0) return false;
    }
    return true;
  }
}

template <class T>
ConvexRegion<T> clip_halfplane(const ConvexRegion<T>& region, const Line<T>& line, Side side) {
  // Signed coordinate along the chosen side's inward normal. Both
  // complementary clips see the same magnitudes, so the crossing points they
  // compute are identical and the two halves partition the region.
  const auto signed_coord = [&](const Pt<T>& q) -> T {
    T c = line.dir.x * (q.y - line.anchor.y) - line.dir.y * (q.x - line.anchor.x);
    if (side == Side::Right) c = -c;
    return c;
  };
  const auto intersect = [&](const Pt<T>& u, const Pt<T>& v, const T& su, const T& sv) -> Pt<T> {
    const T t = su / (su - sv);
    return {u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)};
  };

  const auto& verts = region.vertices();
  const std::size_t n = verts.size();
  if (n == 0) return {};
  if (n == 1) {
    return signed_coord(verts[0]) >= 0 ? region : ConvexRegion<T>{};
  }
  if (n == 2) {
    const T s0 = signed_coord(verts[0]);
    const T s1 = signed_coord(verts[1]);
    if (s0 >= 0 && s1 >= 0) return region;
    if (s0 < 0 && s1 < 0) return {};
    Pt<T> xp = intersect(verts[0], verts[1], s0, s1);
    Pt<T> keep = s0 >= 0 ? verts[0] : verts[1];
    return ConvexRegion<T>::finalize({keep, xp});
  }

  std::vector<T> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = signed_coord(verts[i]);
  std::vector<Pt<T>> out;
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const bool in_i = s[i] >= 0;
    const bool in_j = s[j] >= 0;
    if (in_i) out.push_back(verts[i]);
    if (in_i != in_j) out.push_back(intersect(verts[i], verts[j], s[i], s[j]));
  }
  return ConvexRegion<T>::finalize(std::move(out));
}

}  // namespace heilbronn
