#ifndef ISOBATH_SIM_HPP
#define ISOBATH_SIM_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "isobath/gp.hpp"

namespace isobath {

/// One smooth depression: amplitude * exp(-d^2 / (2 radius^2)).
struct Basin {
  GeoPoint center;
  double amplitude = 20.0;  ///< meters at the deepest point
  double radius = 150.0;    ///< meters, Gaussian scale
};

/// Regular depth raster. Row i spans north = origin_north + i * cellsize,
/// column j spans east = origin_east + j * cellsize; values are node samples.
struct GridData {
  int ncols = 0;
  int nrows = 0;
  double origin_north = 0.0;
  double origin_east = 0.0;
  double cellsize = 1.0;
  double nodata = -9999.0;
  std::vector<double> values;  ///< row-major, nrows * ncols

  double at(int row, int col) const { return values[static_cast<std::size_t>(row) * ncols + col]; }
};

/// Reads the plain-text raster format: a header of ncols, nrows,
/// origin_north, origin_east, cellsize, nodata (one `key value` pair per
/// line, any order) followed by row-major depth values. Cells equal to the
/// nodata marker are replaced with depth 0. Throws std::runtime_error on
/// malformed input.
GridData read_ascii_grid(std::istream& in);
GridData read_ascii_grid_file(const std::string& path);
void write_ascii_grid(std::ostream& out, const GridData& grid);

/// Synthetic ground-truth bathymetry: either a sum of smooth basins or a
/// bilinearly interpolated grid (clamped at the edges).
class BathymetryField {
 public:
  enum class Kind { kAnalytic, kGridded };

  static BathymetryField analytic(std::vector<Basin> basins);
  static BathymetryField gridded(GridData grid);
  /// `count` random basins seeded by `seed`, centers inside `region` shrunk
  /// by `margin` on every side.
  static BathymetryField random_basins(std::uint64_t seed, const BoundingBox& region,
                                       int count, double margin = 150.0);

  double depth(const GeoPoint& p) const;
  Kind kind() const { return kind_; }
  const std::vector<Basin>& basins() const { return basins_; }

 private:
  BathymetryField() = default;
  Kind kind_ = Kind::kAnalytic;
  std::vector<Basin> basins_;
  GridData grid_;
};

struct SensorConfig {
  double rate_hz = 10.0;
  double noise_std = 2.5;  ///< meters, matches the GP noise model
  double speed = 1.6;      ///< meters/second along track
  double dwell_s = 3.0;    ///< loiter at the waypoint after arrival

  void validate() const;
};

struct Measurement {
  double time_s = 0.0;  ///< relative to the start of the segment
  GeoPoint position;
  double depth = 0.0;
};

using MeasurementStream = std::vector<Measurement>;

/// Depth samples taken while tracking the line from `from` to `to` at
/// constant speed, one per 1/rate_hz seconds starting one period in, plus
/// dwell_s seconds of samples at the endpoint. Depths are ground truth plus
/// N(0, noise_std^2) noise drawn from `rng`.
MeasurementStream traverse_segment(const GeoPoint& from, const GeoPoint& to,
                                   const BathymetryField& field, const SensorConfig& cfg,
                                   std::mt19937_64& rng);

/// Offers every sample to the model in time order; returns how many were
/// retained. When `retained` is given it receives one flag per sample.
int ingest(GpModel& model, const MeasurementStream& stream,
           std::vector<std::uint8_t>* retained = nullptr);

}  // namespace isobath

#endif  // ISOBATH_SIM_HPP
