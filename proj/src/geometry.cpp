#include "isobath/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace isobath {

double point_line_distance(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
  const double dn = b.north - a.north;
  const double de = b.east - a.east;
  const double len = std::sqrt(dn * dn + de * de);
  if (len == 0.0) return distance(p, a);
  // |cross((b-a), (p-a))| / |b-a|
  const double cross = dn * (p.east - a.east) - de * (p.north - a.north);
  return std::abs(cross) / len;
}

double point_segment_distance(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
  const double dn = b.north - a.north;
  const double de = b.east - a.east;
  const double len_sq = dn * dn + de * de;
  if (len_sq == 0.0) return distance(p, a);
  double t = ((p.north - a.north) * dn + (p.east - a.east) * de) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  const GeoPoint proj{a.north + t * dn, a.east + t * de};
  return distance(p, proj);
}

namespace {

// Orientation of c relative to the directed line a->b.
double orient(const GeoPoint& a, const GeoPoint& b, const GeoPoint& c) {
  return (b.north - a.north) * (c.east - a.east) -
         (b.east - a.east) * (c.north - a.north);
}

bool segments_properly_intersect(const GeoPoint& a, const GeoPoint& b,
                                 const GeoPoint& c, const GeoPoint& d) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) &&
         o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

double shoelace_area(const std::vector<GeoPoint>& v) {
  double twice = 0.0;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    twice += v[j].north * v[i].east - v[i].north * v[j].east;
  }
  return 0.5 * std::abs(twice);
}

}  // namespace

OperationalArea::OperationalArea(std::vector<GeoPoint> boundary)
    : verts_(std::move(boundary)) {
  if (verts_.size() < 3) {
    throw std::invalid_argument("operational area: polygon needs >= 3 vertices");
  }
  for (const auto& p : verts_) {
    if (!finite(p)) throw std::invalid_argument("operational area: non-finite vertex");
    bbox_.expand(p);
  }
  area_ = shoelace_area(verts_);
  if (area_ <= 0.0) {
    throw std::invalid_argument("operational area: polygon has zero area");
  }
  // Simplicity: no two non-adjacent edges may properly intersect.
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_properly_intersect(verts_[i], verts_[(i + 1) % n],
                                      verts_[j], verts_[(j + 1) % n])) {
        throw std::invalid_argument("operational area: polygon self-intersects");
      }
    }
  }
}

bool OperationalArea::on_boundary(const GeoPoint& p, double tol) const {
  const std::size_t n = verts_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (point_segment_distance(p, verts_[j], verts_[i]) <= tol) return true;
  }
  return false;
}

bool OperationalArea::contains(const GeoPoint& p) const {
  if (!bbox_.contains(p, kBoundaryTol)) return false;
  if (on_boundary(p)) return true;
  // Even-odd rule, ray cast toward decreasing north.
  bool inside = false;
  const std::size_t n = verts_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const GeoPoint& a = verts_[j];
    const GeoPoint& b = verts_[i];
    if ((a.east > p.east) != (b.east > p.east)) {
      const double t = (p.east - a.east) / (b.east - a.east);
      const double cross_north = a.north + t * (b.north - a.north);
      if (p.north < cross_north) inside = !inside;
    }
  }
  return inside;
}

bool OperationalArea::strictly_inside(const GeoPoint& p) const {
  return contains(p) && !on_boundary(p);
}

bool OperationalArea::segment_inside(const GeoPoint& a, const GeoPoint& b) const {
  if (!contains(a) || !contains(b)) return false;
  const std::size_t n = verts_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (segments_properly_intersect(a, b, verts_[j], verts_[i])) return false;
  }
  return true;
}

}  // namespace isobath
