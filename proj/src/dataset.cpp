#include "isobath/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isobath {

Dataset::Dataset(double retention_radius, double cell_size)
    : retention_radius_(retention_radius), cell_size_(cell_size) {
  if (retention_radius < 0.0) {
    throw std::invalid_argument("dataset: retention radius must be >= 0");
  }
  if (!(cell_size > 0.0)) {
    throw std::invalid_argument("dataset: cell size must be > 0");
  }
}

Dataset::CellKey Dataset::cell_of(const GeoPoint& p) const {
  // cell_size may be +inf, in which case everything lands in cell (0,0).
  return {static_cast<std::int64_t>(std::floor(p.north / cell_size_)),
          static_cast<std::int64_t>(std::floor(p.east / cell_size_))};
}

void Dataset::push_unchecked(const Datum& d) {
  const auto idx = static_cast<std::uint32_t>(samples_.size());
  samples_.push_back(d);
  grid_[cell_of(d.position)].push_back(idx);
}

bool Dataset::maybe_insert(const Datum& d) {
  if (retention_radius_ > 0.0) {
    const double r_sq = retention_radius_ * retention_radius_;
    for (std::uint32_t i : query_radius(d.position, retention_radius_)) {
      if (distance_sq(samples_[i].position, d.position) < r_sq) return false;
    }
  }
  push_unchecked(d);
  return true;
}

std::vector<std::uint32_t> Dataset::query_radius(const GeoPoint& p, double radius) const {
  std::vector<std::uint32_t> out;
  if (samples_.empty() || radius < 0.0) return out;
  if (!std::isfinite(radius)) {
    out.resize(samples_.size());
    for (std::uint32_t i = 0; i < samples_.size(); ++i) out[i] = i;
    return out;
  }
  const double r_sq = radius * radius;
  const std::int64_t ring =
      std::isfinite(cell_size_) ? static_cast<std::int64_t>(std::ceil(radius / cell_size_)) : 0;
  // For very large radii it is cheaper to walk the occupied cells; results
  // are sorted either way, so hash order never shows.
  if (ring > 0 &&
      static_cast<double>(2 * ring + 1) * static_cast<double>(2 * ring + 1) >
          static_cast<double>(grid_.size())) {
    for (const auto& [key, indices] : grid_) {
      (void)key;
      for (std::uint32_t i : indices) {
        if (distance_sq(samples_[i].position, p) <= r_sq) out.push_back(i);
      }
    }
  } else {
    const CellKey c = cell_of(p);
    for (std::int64_t dx = -ring; dx <= ring; ++dx) {
      for (std::int64_t dy = -ring; dy <= ring; ++dy) {
        const auto it = grid_.find(CellKey{c.x + dx, c.y + dy});
        if (it == grid_.end()) continue;
        for (std::uint32_t i : it->second) {
          if (distance_sq(samples_[i].position, p) <= r_sq) out.push_back(i);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dataset Dataset::local_subset(const GeoPoint& p, double radius) const {
  Dataset sub(retention_radius_, cell_size_);
  for (std::uint32_t i : query_radius(p, radius)) {
    sub.push_unchecked(samples_[i]);  // subset of a thinned set stays thinned
  }
  return sub;
}

}  // namespace isobath
