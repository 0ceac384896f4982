#include "isobath/config.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace isobath {

void PlannerConfig::validate() const {
  if (execution_horizon < 1 || planning_horizon < execution_horizon ||
      (mission_length != 0 && mission_length < planning_horizon)) {
    throw std::invalid_argument("planner: need 1 <= execution <= horizon <= mission length");
  }
  if (!(exploration >= 0.0)) throw std::invalid_argument("planner: exploration must be >= 0");
  if (iteration_budget < 1) throw std::invalid_argument("planner: iteration budget must be >= 1");
}

MissionConfig default_mission_config() {
  MissionConfig cfg;
  cfg.area_polygon = {{0, 0}, {900, 0}, {900, 600}, {0, 600}};
  cfg.prior.line_a = {150, 100};
  cfg.prior.line_b = {750, 500};
  cfg.prior.falloff_scale = 300.0;
  cfg.prior.max_depth = 25.0;
  cfg.gp = GpHyperparams{};  // sigma_f 5, l_c 40, sigma_n 2.5, delta_c 40, delta_f 6
  cfg.reward = RewardConfig{};  // level 15, beta 2
  cfg.action_angles_deg = {-90, -45, -15, 0, 15, 45, 90};
  cfg.step_length = 30.0;
  cfg.start = {0.0, {100.0, 300.0}};
  cfg.lawnmower.track_spacing = 40.0;
  cfg.lawnmower.leg_length = 400.0;
  cfg.lawnmower.max_legs = 1000;
  cfg.bathymetry.basins = {
      {{172, 223}, 21.0, 140.0},
      {{400, 375}, 21.0, 140.0},
      {{628, 527}, 21.0, 140.0},
  };
  return cfg;
}

void MissionConfig::validate() const {
  auto wrap = [](const char* key, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      throw ConfigError(key, 0, e.what());
    }
  };
  wrap("area.polygon", [&] { make_area(); });
  wrap("prior", [&] { prior.validate(); });
  wrap("gp", [&] {
    gp.validate();
    if (!(gp.retention_radius > 0.0)) {
      throw std::invalid_argument("retention_radius must be > 0 in mission configs");
    }
    if (!std::isfinite(gp.locality_radius)) {
      throw std::invalid_argument("locality_radius must be finite in mission configs");
    }
  });
  wrap("reward", [&] { reward.validate(); });
  wrap("vehicle", [&] {
    const ActionSet acts = make_actions();
    lawnmower.validate(acts);
  });
  wrap("planner", [&] { planner.validate(); });
  wrap("sensor", [&] { sensor.validate(); });
  wrap("vehicle.start", [&] {
    if (!make_area().contains(start.position)) {
      throw std::invalid_argument("start position is outside the operational area");
    }
  });
  wrap("run.grid_resolution", [&] {
    if (!(run.grid_resolution > 0.0)) throw std::invalid_argument("must be > 0");
  });
  if (bathymetry.kind == BathymetryConfig::Kind::kGrid) {
    if (bathymetry.file.empty() || !std::filesystem::exists(bathymetry.file)) {
      throw ConfigError("bathymetry.file", 0, "grid file not found: " + bathymetry.file);
    }
  } else if (bathymetry.basins.empty() && bathymetry.random_count <= 0) {
    throw ConfigError("bathymetry.basins", 0, "analytic field needs basins or random_basins > 0");
  }
}

namespace {

double parse_double(const std::string& key, const std::string& v, int line) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') throw ConfigError(key, line, "not a number: " + v);
  return x;
}

std::int64_t parse_int(const std::string& key, const std::string& v, int line) {
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0') throw ConfigError(key, line, "not an integer: " + v);
  return x;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_number_list(const std::string& key, const std::string& v, int line) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item, line));
  }
  return out;
}

// "n,e; n,e; ..." -> points
std::vector<GeoPoint> parse_point_list(const std::string& key, const std::string& v, int line) {
  std::vector<GeoPoint> out;
  std::stringstream ss(v);
  std::string group;
  while (std::getline(ss, group, ';')) {
    group = trim(group);
    if (group.empty()) continue;
    const auto nums = parse_number_list(key, group, line);
    if (nums.size() != 2) throw ConfigError(key, line, "expected 'north,east' pairs");
    out.push_back({nums[0], nums[1]});
  }
  return out;
}

std::vector<Basin> parse_basin_list(const std::string& key, const std::string& v, int line) {
  std::vector<Basin> out;
  std::stringstream ss(v);
  std::string group;
  while (std::getline(ss, group, ';')) {
    group = trim(group);
    if (group.empty()) continue;
    const auto nums = parse_number_list(key, group, line);
    if (nums.size() != 4) {
      throw ConfigError(key, line, "expected 'north,east,amplitude,radius' groups");
    }
    out.push_back(Basin{{nums[0], nums[1]}, nums[2], nums[3]});
  }
  return out;
}

}  // namespace

void apply_config_entry(MissionConfig& cfg, const std::string& key, const std::string& value,
                        int line) {
  auto num = [&] { return parse_double(key, value, line); };
  auto integer = [&] { return parse_int(key, value, line); };

  if (key == "area.polygon") {
    cfg.area_polygon = parse_point_list(key, value, line);
  } else if (key == "prior.line") {
    const auto pts = parse_point_list(key, value, line);
    if (pts.size() != 2) throw ConfigError(key, line, "expected exactly two points");
    cfg.prior.line_a = pts[0];
    cfg.prior.line_b = pts[1];
  } else if (key == "prior.falloff_scale") {
    cfg.prior.falloff_scale = num();
  } else if (key == "prior.max_depth") {
    cfg.prior.max_depth = num();
  } else if (key == "gp.sigma_f") {
    cfg.gp.signal_std = num();
  } else if (key == "gp.length_scale") {
    cfg.gp.length_scale = num();
  } else if (key == "gp.sigma_n") {
    cfg.gp.noise_std = num();
  } else if (key == "gp.locality_radius") {
    cfg.gp.locality_radius = num();
  } else if (key == "gp.retention_radius") {
    cfg.gp.retention_radius = num();
  } else if (key == "reward.level") {
    cfg.reward.level = num();
  } else if (key == "reward.beta") {
    cfg.reward.beta = num();
  } else if (key == "vehicle.actions_deg") {
    cfg.action_angles_deg = parse_number_list(key, value, line);
  } else if (key == "vehicle.step_length") {
    cfg.step_length = num();
  } else if (key == "vehicle.start_north") {
    cfg.start.position.north = num();
  } else if (key == "vehicle.start_east") {
    cfg.start.position.east = num();
  } else if (key == "vehicle.start_heading_deg") {
    cfg.start.heading = normalize_heading(num() * kPi / 180.0);
  } else if (key == "lawnmower.track_spacing") {
    cfg.lawnmower.track_spacing = num();
  } else if (key == "lawnmower.leg_length") {
    cfg.lawnmower.leg_length = num();
  } else if (key == "lawnmower.max_legs") {
    cfg.lawnmower.max_legs = static_cast<int>(integer());
  } else if (key == "lawnmower.turn_side") {
    if (value == "toward-first-feasible") {
      cfg.lawnmower.turn_side = TurnSide::kTowardFirstFeasible;
    } else if (value == "left") {
      cfg.lawnmower.turn_side = TurnSide::kLeft;
    } else if (value == "right") {
      cfg.lawnmower.turn_side = TurnSide::kRight;
    } else {
      throw ConfigError(key, line, "expected toward-first-feasible, left, or right");
    }
  } else if (key == "planner.horizon") {
    cfg.planner.planning_horizon = static_cast<int>(integer());
  } else if (key == "planner.execution_horizon") {
    cfg.planner.execution_horizon = static_cast<int>(integer());
  } else if (key == "planner.mission_length") {
    cfg.planner.mission_length = static_cast<int>(integer());
  } else if (key == "planner.exploration") {
    cfg.planner.exploration = num();
  } else if (key == "planner.iterations") {
    cfg.planner.iteration_budget = static_cast<int>(integer());
  } else if (key == "planner.seed") {
    cfg.planner.rng_seed = static_cast<std::uint64_t>(integer());
  } else if (key == "sensor.rate_hz") {
    cfg.sensor.rate_hz = num();
  } else if (key == "sensor.noise_std") {
    cfg.sensor.noise_std = num();
  } else if (key == "sensor.speed") {
    cfg.sensor.speed = num();
  } else if (key == "sensor.dwell") {
    cfg.sensor.dwell_s = num();
  } else if (key == "sensor.seed") {
    cfg.sensor_seed = static_cast<std::uint64_t>(integer());
  } else if (key == "bathymetry.kind") {
    if (value == "analytic") {
      cfg.bathymetry.kind = BathymetryConfig::Kind::kAnalytic;
    } else if (value == "grid") {
      cfg.bathymetry.kind = BathymetryConfig::Kind::kGrid;
    } else {
      throw ConfigError(key, line, "expected analytic or grid");
    }
  } else if (key == "bathymetry.basins") {
    cfg.bathymetry.basins = parse_basin_list(key, value, line);
  } else if (key == "bathymetry.random_basins") {
    cfg.bathymetry.random_count = static_cast<int>(integer());
  } else if (key == "bathymetry.seed") {
    cfg.bathymetry.seed = static_cast<std::uint64_t>(integer());
  } else if (key == "bathymetry.file") {
    cfg.bathymetry.file = value;
  } else if (key == "run.mode") {
    if (value == "terminal-rewards") {
      cfg.run.mode = MissionMode::kTerminalRewards;
    } else if (value == "baseline") {
      cfg.run.mode = MissionMode::kBaseline;
    } else if (value == "both") {
      cfg.run.mode = MissionMode::kBoth;
    } else {
      throw ConfigError(key, line, "expected terminal-rewards, baseline, or both");
    }
  } else if (key == "run.out_dir") {
    cfg.run.out_dir = value;
  } else if (key == "run.grid_resolution") {
    cfg.run.grid_resolution = num();
  } else {
    throw ConfigError(key, line, "unknown key");
  }
}

MissionConfig load_mission_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  MissionConfig cfg = default_mission_config();
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(entry, line_no, "expected 'key = value'");
    }
    apply_config_entry(cfg, trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)), line_no);
  }
  cfg.validate();
  return cfg;
}

BathymetryField make_field(const MissionConfig& cfg) {
  if (cfg.bathymetry.kind == BathymetryConfig::Kind::kGrid) {
    return BathymetryField::gridded(read_ascii_grid_file(cfg.bathymetry.file));
  }
  if (cfg.bathymetry.random_count > 0) {
    BoundingBox box;
    for (const GeoPoint& p : cfg.area_polygon) box.expand(p);
    return BathymetryField::random_basins(cfg.bathymetry.seed, box, cfg.bathymetry.random_count);
  }
  return BathymetryField::analytic(cfg.bathymetry.basins);
}

const char* mission_mode_name(MissionMode mode) {
  switch (mode) {
    case MissionMode::kTerminalRewards: return "terminal-rewards";
    case MissionMode::kBaseline: return "baseline";
    case MissionMode::kBoth: return "both";
  }
  return "?";
}

}  // namespace isobath
