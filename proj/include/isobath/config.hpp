#ifndef ISOBATH_CONFIG_HPP
#define ISOBATH_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "isobath/lawnmower.hpp"
#include "isobath/reward.hpp"
#include "isobath/sim.hpp"
#include "isobath/vehicle.hpp"

namespace isobath {

/// Configuration problem, carrying the offending key and (when known) the
/// line in the config file.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, int line, const std::string& message)
      : std::runtime_error(line > 0 ? key + " (line " + std::to_string(line) + "): " + message
                                    : key + ": " + message),
        key_(key),
        line_(line) {}

  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  std::string key_;
  int line_;
};

struct PlannerConfig {
  int planning_horizon = 5;    ///< n, steps per epoch plan
  int execution_horizon = 1;   ///< m, steps executed before replanning
  int mission_length = 100;    ///< l, total steps
  double exploration = 1.4142135623730951;  ///< UCT constant C
  int iteration_budget = 2000;  ///< rollouts per epoch
  std::uint64_t rng_seed = 1;
  bool capture_tree = false;   ///< keep per-node statistics in the result (tests)

  void validate() const;
};

enum class MissionMode { kTerminalRewards, kBaseline, kBoth };

struct BathymetryConfig {
  enum class Kind { kAnalytic, kGrid };
  Kind kind = Kind::kAnalytic;
  std::vector<Basin> basins;     ///< analytic kind, explicit basins
  int random_count = 0;          ///< analytic kind: > 0 generates basins from seed
  std::uint64_t seed = 7;
  std::string file;              ///< grid kind: raster path
};

struct RunConfig {
  MissionMode mode = MissionMode::kTerminalRewards;
  std::string out_dir = "out";
  double grid_resolution = 10.0;  ///< meters, posterior dump spacing
};

struct MissionConfig {
  std::vector<GeoPoint> area_polygon;
  PriorMeanSpec prior;
  GpHyperparams gp;
  RewardConfig reward;
  std::vector<double> action_angles_deg;
  double step_length = 30.0;
  VehicleState start;
  LawnmowerSpec lawnmower;
  PlannerConfig planner;
  SensorConfig sensor;
  std::uint64_t sensor_seed = 1000001;
  BathymetryConfig bathymetry;
  RunConfig run;

  OperationalArea make_area() const { return OperationalArea(area_polygon); }
  ActionSet make_actions() const { return ActionSet::from_degrees(action_angles_deg, step_length); }

  /// Cross-field validation (component invariants, start containment,
  /// referenced files). Throws ConfigError.
  void validate() const;
};

/// The shipped defaults: 900 x 600 m rectangle, the field-trial GP and
/// planner parameters, and a three-basin synthetic lake offset from the
/// prior-mean line.
MissionConfig default_mission_config();

/// Parses a flat `section.key = value` file over the defaults.
/// Unknown keys and malformed values raise ConfigError with the line number.
MissionConfig load_mission_config(const std::string& path);

/// Applies one key/value pair (the file format's semantics) to a config.
void apply_config_entry(MissionConfig& cfg, const std::string& key, const std::string& value,
                        int line = 0);

/// Builds the ground-truth field described by the config.
BathymetryField make_field(const MissionConfig& cfg);

const char* mission_mode_name(MissionMode mode);

}  // namespace isobath

#endif  // ISOBATH_CONFIG_HPP
