#ifndef ISOBATH_IO_HPP
#define ISOBATH_IO_HPP

#include <iosfwd>
#include <string>

#include "isobath/planner.hpp"

namespace isobath {

/// Shortest decimal form that parses back to the exact same double.
std::string format_double(double v);

/// Header: step,north_m,east_m,J_anticipated,J_realized,B_k,J_plus_B,epoch_ms
void write_mission_log_csv(std::ostream& out, const MissionLog& log);

/// Header: time_s,north_m,east_m,depth_m,retained
void write_measurements_csv(std::ostream& out, const std::vector<SampleRecord>& samples);

/// Final retained dataset, header: north_m,east_m,depth_m
void write_retained_csv(std::ostream& out, const Dataset& data);

void write_summary(std::ostream& out, const MissionLog& log);

struct PosteriorGrid {
  int nrows = 0;
  int ncols = 0;
  double origin_north = 0.0;
  double origin_east = 0.0;
  double resolution = 0.0;
  std::vector<double> mean;       ///< row-major
  std::vector<double> stddev;
  std::vector<double> ambiguity;  ///< beta * sigma - |mu - level| per cell
};

/// Evaluates the model over the area's bounding box at the given spacing.
PosteriorGrid evaluate_posterior_grid(const GpModel& model, const OperationalArea& area,
                                      double resolution, const RewardConfig& reward_cfg);

/// Writes <prefix>_meta.txt plus <prefix>_mu.csv, <prefix>_sigma.csv and
/// <prefix>_ambiguity.csv (row-major CSV matrices). Values round-trip
/// exactly through the printed text.
void dump_posterior(const GpModel& model, const OperationalArea& area, double resolution,
                    const RewardConfig& reward_cfg, const std::string& prefix);

/// Reads back one matrix written by dump_posterior.
std::vector<double> read_csv_matrix(std::istream& in);

}  // namespace isobath

#endif  // ISOBATH_IO_HPP
