#include "isobath/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "isobath/io.hpp"
#include "isobath/planner.hpp"

namespace isobath {

namespace {

namespace fs = std::filesystem;

void apply(MissionConfig& cfg, const CliOverrides& o) {
  if (o.seed) {
    cfg.planner.rng_seed = *o.seed;
    cfg.sensor_seed = *o.seed + 1;
  }
  if (o.out_dir) cfg.run.out_dir = *o.out_dir;
  if (o.mode) cfg.run.mode = *o.mode;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_arm_outputs(const fs::path& dir, const MissionConfig& cfg,
                       const MissionResult& result) {
  fs::create_directories(dir);
  {
    auto out = open_out(dir / "mission_log.csv");
    write_mission_log_csv(out, result.log);
  }
  {
    auto out = open_out(dir / "measurements.csv");
    write_measurements_csv(out, result.samples);
  }
  {
    auto out = open_out(dir / "retained.csv");
    write_retained_csv(out, result.model.data());
  }
  {
    auto out = open_out(dir / "summary.txt");
    write_summary(out, result.log);
  }
  dump_posterior(result.model, cfg.make_area(), cfg.run.grid_resolution, cfg.reward,
                 (dir / "posterior").string());
}

}  // namespace

int run_mission(const std::string& config_path, const CliOverrides& overrides) {
  MissionConfig cfg;
  try {
    cfg = load_mission_config(config_path);
    apply(cfg, overrides);
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  }
  try {
    const BathymetryField field = make_field(cfg);
    const fs::path out_dir(cfg.run.out_dir);
    auto run_arm = [&](bool terminal) {
      const char* name = terminal ? "terminal" : "baseline";
      const MissionResult result =
          terminal ? rh_execute(cfg, field) : rh_execute_baseline(cfg, field);
      write_arm_outputs(out_dir / name, cfg, result);
      std::cout << name << ": final J = " << format_double(result.log.final_j_anticipated)
                << ", bound = " << format_double(result.log.running_bound)
                << ", guarantee " << (result.log.guarantee_ok ? "satisfied" : "VIOLATED")
                << (result.log.dead_end ? " (stopped at dead end)" : "")
                << ", planning " << static_cast<long long>(result.planning_wall_ms) << " ms\n";
    };
    if (cfg.run.mode != MissionMode::kBaseline) run_arm(true);
    if (cfg.run.mode != MissionMode::kTerminalRewards) run_arm(false);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 2;
  }
}

int validate_config(const std::string& config_path) {
  try {
    load_mission_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  }
  std::cout << "config ok\n";
  return 0;
}

int dump_prior(const std::string& config_path, const CliOverrides& overrides) {
  MissionConfig cfg;
  try {
    cfg = load_mission_config(config_path);
    apply(cfg, overrides);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  }
  try {
    const fs::path out_dir(cfg.run.out_dir);
    fs::create_directories(out_dir);
    const GpModel model(cfg.prior, cfg.gp);  // empty dataset: the prior predictive
    dump_posterior(model, cfg.make_area(), cfg.run.grid_resolution, cfg.reward,
                   (out_dir / "prior").string());
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace isobath
