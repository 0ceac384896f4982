#include "isobath/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isobath {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_mission_log_csv(std::ostream& out, const MissionLog& log) {
  out << "step,north_m,east_m,J_anticipated,J_realized,B_k,J_plus_B,epoch_ms\n";
  for (const MissionStepRecord& r : log.rows) {
    out << r.step << ',' << format_double(r.waypoint.north) << ','
        << format_double(r.waypoint.east) << ',' << format_double(r.j_anticipated) << ','
        << format_double(r.j_realized) << ',' << format_double(r.bound) << ','
        << format_double(r.j_plus_bound) << ',' << format_double(r.epoch_ms) << '\n';
  }
}

void write_measurements_csv(std::ostream& out, const std::vector<SampleRecord>& samples) {
  out << "time_s,north_m,east_m,depth_m,retained\n";
  for (const SampleRecord& s : samples) {
    out << format_double(s.time_s) << ',' << format_double(s.position.north) << ','
        << format_double(s.position.east) << ',' << format_double(s.depth) << ','
        << (s.retained ? 1 : 0) << '\n';
  }
}

void write_retained_csv(std::ostream& out, const Dataset& data) {
  out << "north_m,east_m,depth_m\n";
  for (const Datum& d : data.samples()) {
    out << format_double(d.position.north) << ',' << format_double(d.position.east) << ','
        << format_double(d.depth) << '\n';
  }
}

void write_summary(std::ostream& out, const MissionLog& log) {
  out << "initial_bound = " << format_double(log.initial_bound) << '\n'
      << "running_bound = " << format_double(log.running_bound) << '\n'
      << "final_J_anticipated = " << format_double(log.final_j_anticipated) << '\n'
      << "final_J_realized = " << format_double(log.final_j_realized) << '\n'
      << "guarantee_satisfied = " << (log.guarantee_ok ? 1 : 0) << '\n'
      << "dead_end = " << (log.dead_end ? 1 : 0) << '\n'
      << "steps = " << (log.rows.empty() ? 0 : log.rows.back().step) << '\n';
}

PosteriorGrid evaluate_posterior_grid(const GpModel& model, const OperationalArea& area,
                                      double resolution, const RewardConfig& reward_cfg) {
  if (!(resolution > 0.0)) throw std::invalid_argument("posterior grid: resolution must be > 0");
  const BoundingBox& box = area.bounds();
  PosteriorGrid g;
  g.origin_north = box.north_min;
  g.origin_east = box.east_min;
  g.resolution = resolution;
  g.nrows = static_cast<int>(std::floor((box.north_max - box.north_min) / resolution)) + 1;
  g.ncols = static_cast<int>(std::floor((box.east_max - box.east_min) / resolution)) + 1;
  const std::size_t n = static_cast<std::size_t>(g.nrows) * static_cast<std::size_t>(g.ncols);
  g.mean.reserve(n);
  g.stddev.reserve(n);
  g.ambiguity.reserve(n);
  for (int r = 0; r < g.nrows; ++r) {
    for (int c = 0; c < g.ncols; ++c) {
      const GeoPoint p{g.origin_north + r * resolution, g.origin_east + c * resolution};
      const Prediction pred = model.predict(p);
      g.mean.push_back(pred.mean);
      g.stddev.push_back(pred.stddev());
      g.ambiguity.push_back(ambiguity(pred, reward_cfg));
    }
  }
  return g;
}

namespace {

void write_matrix(const std::string& path, const std::vector<double>& values, int nrows,
                  int ncols) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (int r = 0; r < nrows; ++r) {
    for (int c = 0; c < ncols; ++c) {
      out << format_double(values[static_cast<std::size_t>(r) * ncols + c])
          << (c + 1 == ncols ? '\n' : ',');
    }
  }
}

}  // namespace

void dump_posterior(const GpModel& model, const OperationalArea& area, double resolution,
                    const RewardConfig& reward_cfg, const std::string& prefix) {
  const PosteriorGrid g = evaluate_posterior_grid(model, area, resolution, reward_cfg);
  {
    std::ofstream meta(prefix + "_meta.txt");
    if (!meta) throw std::runtime_error("cannot write " + prefix + "_meta.txt");
    meta << "nrows = " << g.nrows << '\n'
         << "ncols = " << g.ncols << '\n'
         << "origin_north = " << format_double(g.origin_north) << '\n'
         << "origin_east = " << format_double(g.origin_east) << '\n'
         << "resolution = " << format_double(g.resolution) << '\n'
         << "level = " << format_double(reward_cfg.level) << '\n';
  }
  write_matrix(prefix + "_mu.csv", g.mean, g.nrows, g.ncols);
  write_matrix(prefix + "_sigma.csv", g.stddev, g.nrows, g.ncols);
  write_matrix(prefix + "_ambiguity.csv", g.ambiguity, g.nrows, g.ncols);
}

std::vector<double> read_csv_matrix(std::istream& in) {
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (!cell.empty()) out.push_back(std::strtod(cell.c_str(), nullptr));
    }
  }
  return out;
}

}  // namespace isobath
