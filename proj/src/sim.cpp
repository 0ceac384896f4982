#include "isobath/sim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isobath {

GridData read_ascii_grid(std::istream& in) {
  GridData grid;
  std::map<std::string, double> header;
  const char* keys[] = {"ncols", "nrows", "origin_north", "origin_east", "cellsize", "nodata"};
  std::string key;
  for (int i = 0; i < 6; ++i) {
    double value = 0.0;
    if (!(in >> key >> value)) throw std::runtime_error("grid: truncated header");
    header[key] = value;
  }
  for (const char* k : keys) {
    if (!header.count(k)) throw std::runtime_error(std::string("grid: missing header key ") + k);
  }
  grid.ncols = static_cast<int>(header["ncols"]);
  grid.nrows = static_cast<int>(header["nrows"]);
  grid.origin_north = header["origin_north"];
  grid.origin_east = header["origin_east"];
  grid.cellsize = header["cellsize"];
  grid.nodata = header["nodata"];
  if (grid.ncols < 2 || grid.nrows < 2 || !(grid.cellsize > 0.0)) {
    throw std::runtime_error("grid: need ncols >= 2, nrows >= 2, cellsize > 0");
  }
  const std::size_t n = static_cast<std::size_t>(grid.ncols) * grid.nrows;
  grid.values.reserve(n);
  double v = 0.0;
  while (grid.values.size() < n && (in >> v)) {
    grid.values.push_back(v == grid.nodata ? 0.0 : v);
  }
  if (grid.values.size() != n) throw std::runtime_error("grid: wrong number of values");
  return grid;
}

GridData read_ascii_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("grid: cannot open " + path);
  return read_ascii_grid(in);
}

void write_ascii_grid(std::ostream& out, const GridData& grid) {
  out << "ncols " << grid.ncols << "\n"
      << "nrows " << grid.nrows << "\n"
      << "origin_north " << grid.origin_north << "\n"
      << "origin_east " << grid.origin_east << "\n"
      << "cellsize " << grid.cellsize << "\n"
      << "nodata " << grid.nodata << "\n";
  for (int r = 0; r < grid.nrows; ++r) {
    for (int c = 0; c < grid.ncols; ++c) {
      out << grid.at(r, c) << (c + 1 == grid.ncols ? '\n' : ' ');
    }
  }
}

BathymetryField BathymetryField::analytic(std::vector<Basin> basins) {
  BathymetryField f;
  f.kind_ = Kind::kAnalytic;
  f.basins_ = std::move(basins);
  return f;
}

BathymetryField BathymetryField::gridded(GridData grid) {
  BathymetryField f;
  f.kind_ = Kind::kGridded;
  f.grid_ = std::move(grid);
  return f;
}

BathymetryField BathymetryField::random_basins(std::uint64_t seed, const BoundingBox& region,
                                               int count, double margin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> north(region.north_min + margin, region.north_max - margin);
  std::uniform_real_distribution<double> east(region.east_min + margin, region.east_max - margin);
  std::uniform_real_distribution<double> amp(18.0, 24.0);
  std::uniform_real_distribution<double> rad(120.0, 200.0);
  std::vector<Basin> basins;
  basins.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    basins.push_back(Basin{{north(rng), east(rng)}, amp(rng), rad(rng)});
  }
  return analytic(std::move(basins));
}

double BathymetryField::depth(const GeoPoint& p) const {
  if (kind_ == Kind::kAnalytic) {
    double d = 0.0;
    for (const Basin& b : basins_) {
      d += b.amplitude * std::exp(-distance_sq(p, b.center) / (2.0 * b.radius * b.radius));
    }
    return d;
  }
  // Bilinear interpolation on the node lattice, clamped at the edges.
  const double u = std::clamp((p.north - grid_.origin_north) / grid_.cellsize, 0.0,
                              static_cast<double>(grid_.nrows - 1));
  const double v = std::clamp((p.east - grid_.origin_east) / grid_.cellsize, 0.0,
                              static_cast<double>(grid_.ncols - 1));
  const int r0 = std::min(static_cast<int>(u), grid_.nrows - 2);
  const int c0 = std::min(static_cast<int>(v), grid_.ncols - 2);
  const double fu = u - r0;
  const double fv = v - c0;
  return grid_.at(r0, c0) * (1 - fu) * (1 - fv) + grid_.at(r0 + 1, c0) * fu * (1 - fv) +
         grid_.at(r0, c0 + 1) * (1 - fu) * fv + grid_.at(r0 + 1, c0 + 1) * fu * fv;
}

void SensorConfig::validate() const {
  if (!(rate_hz > 0.0)) throw std::invalid_argument("sensor: rate_hz must be > 0");
  if (!(noise_std > 0.0)) throw std::invalid_argument("sensor: noise_std must be > 0");
  if (!(speed > 0.0)) throw std::invalid_argument("sensor: speed must be > 0");
  if (!(dwell_s > 0.0)) throw std::invalid_argument("sensor: dwell must be > 0");
}

MeasurementStream traverse_segment(const GeoPoint& from, const GeoPoint& to,
                                   const BathymetryField& field, const SensorConfig& cfg,
                                   std::mt19937_64& rng) {
  const double length = distance(from, to);
  const double transit_s = length / cfg.speed;
  const double dt = 1.0 / cfg.rate_hz;
  const int n_transit = static_cast<int>(std::floor(transit_s * cfg.rate_hz));
  const int n_dwell = static_cast<int>(std::floor(cfg.dwell_s * cfg.rate_hz));

  std::normal_distribution<double> noise(0.0, cfg.noise_std);
  MeasurementStream out;
  out.reserve(static_cast<std::size_t>(n_transit + n_dwell));
  for (int k = 1; k <= n_transit; ++k) {
    const double t = k * dt;
    const double frac = t / transit_s;
    const GeoPoint p{from.north + frac * (to.north - from.north),
                     from.east + frac * (to.east - from.east)};
    out.push_back({t, p, field.depth(p) + noise(rng)});
  }
  for (int k = 1; k <= n_dwell; ++k) {
    out.push_back({transit_s + k * dt, to, field.depth(to) + noise(rng)});
  }
  return out;
}

int ingest(GpModel& model, const MeasurementStream& stream, std::vector<std::uint8_t>* retained) {
  if (retained) {
    retained->clear();
    retained->reserve(stream.size());
  }
  int accepted = 0;
  for (const Measurement& m : stream) {
    const bool kept = model.maybe_insert({m.position, m.depth});
    accepted += kept ? 1 : 0;
    if (retained) retained->push_back(kept ? 1 : 0);
  }
  return accepted;
}

}  // namespace isobath
