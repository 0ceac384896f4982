#ifndef ISOBATH_GEOMETRY_HPP
#define ISOBATH_GEOMETRY_HPP

#include <cmath>
#include <limits>
#include <vector>

namespace isobath {

constexpr double kPi = 3.14159265358979323846;

/// A position in the local NED frame (down component is not modeled).
struct GeoPoint {
  double north = 0.0;  ///< meters north of the NED origin
  double east = 0.0;   ///< meters east of the NED origin
};

inline double distance_sq(const GeoPoint& a, const GeoPoint& b) {
  const double dn = a.north - b.north;
  const double de = a.east - b.east;
  return dn * dn + de * de;
}

inline double distance(const GeoPoint& a, const GeoPoint& b) {
  return std::sqrt(distance_sq(a, b));
}

inline bool finite(const GeoPoint& p) {
  return std::isfinite(p.north) && std::isfinite(p.east);
}

/// Minimum euclidean distance from p to the infinite line through a and b.
double point_line_distance(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b);

/// Distance from p to the segment [a, b].
double point_segment_distance(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b);

struct BoundingBox {
  double north_min = std::numeric_limits<double>::infinity();
  double north_max = -std::numeric_limits<double>::infinity();
  double east_min = std::numeric_limits<double>::infinity();
  double east_max = -std::numeric_limits<double>::infinity();

  void expand(const GeoPoint& p) {
    north_min = std::min(north_min, p.north);
    north_max = std::max(north_max, p.north);
    east_min = std::min(east_min, p.east);
    east_max = std::max(east_max, p.east);
  }
  bool contains(const GeoPoint& p, double pad = 0.0) const {
    return p.north >= north_min - pad && p.north <= north_max + pad &&
           p.east >= east_min - pad && p.east <= east_max + pad;
  }
};

/**
 * Bounded region the vehicle must stay within.
 *
 * The boundary is a simple closed polygon. Containment uses the even-odd
 * rule with points on the boundary counting as inside; the strict variant
 * excludes a thin boundary band and is what successor filtering uses.
 */
class OperationalArea {
 public:
  /// Throws std::invalid_argument if the polygon has fewer than 3 vertices,
  /// self-intersects, or has zero area.
  explicit OperationalArea(std::vector<GeoPoint> boundary);

  bool contains(const GeoPoint& p) const;
  bool strictly_inside(const GeoPoint& p) const;

  /// True when the whole segment [a,b] stays inside the polygon.
  bool segment_inside(const GeoPoint& a, const GeoPoint& b) const;

  bool on_boundary(const GeoPoint& p, double tol = kBoundaryTol) const;

  const std::vector<GeoPoint>& vertices() const { return verts_; }
  const BoundingBox& bounds() const { return bbox_; }
  double area() const { return area_; }

  static constexpr double kBoundaryTol = 1e-9;

 private:
  std::vector<GeoPoint> verts_;
  BoundingBox bbox_;
  double area_ = 0.0;
};

}  // namespace isobath

#endif  // ISOBATH_GEOMETRY_HPP
