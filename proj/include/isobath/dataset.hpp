#ifndef ISOBATH_DATASET_HPP
#define ISOBATH_DATASET_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "isobath/geometry.hpp"

namespace isobath {

/// A single position-depth sample (depth positive down, meters).
struct Datum {
  GeoPoint position;
  double depth = 0.0;
};

/**
 * Ordered sample store with spatial-separation retention.
 *
 * A candidate sample is kept only when it is at least retention_radius away
 * from every sample already retained; ties at exactly the radius are kept.
 * Insertion order is preserved, and radius queries return indices in
 * insertion order, so downstream linear algebra is reproducible.
 *
 * Lookups go through a uniform grid hash keyed by cell_size. Thread safety:
 * concurrent reads are fine, insertions must be serialized by the caller.
 */
class Dataset {
 public:
  explicit Dataset(double retention_radius, double cell_size);

  /// Inserts iff the retention spacing holds; returns whether it was kept.
  bool maybe_insert(const Datum& d);

  /// Indices (ascending, i.e. insertion order) of samples within `radius` of p.
  std::vector<std::uint32_t> query_radius(const GeoPoint& p, double radius) const;

  /// Copy holding exactly the samples within `radius` of p, order preserved.
  Dataset local_subset(const GeoPoint& p, double radius) const;

  const std::vector<Datum>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double retention_radius() const { return retention_radius_; }

 private:
  struct CellKey {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const CellKey&) const = default;
  };
  struct CellHash {
    std::size_t operator()(const CellKey& k) const {
      const std::uint64_t a = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
      const std::uint64_t b = static_cast<std::uint64_t>(k.y) * 0xC2B2AE3D27D4EB4FULL;
      return static_cast<std::size_t>(a ^ (b + 0x165667B19E3779F9ULL + (a << 6)));
    }
  };

  CellKey cell_of(const GeoPoint& p) const;
  void push_unchecked(const Datum& d);

  double retention_radius_;
  double cell_size_;
  std::vector<Datum> samples_;
  std::unordered_map<CellKey, std::vector<std::uint32_t>, CellHash> grid_;
};

}  // namespace isobath

#endif  // ISOBATH_DATASET_HPP
