#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "isobath/cli.hpp"
#include "isobath/io.hpp"
#include "isobath/planner.hpp"
#include "isobath/sim.hpp"

using namespace isobath;

namespace {

// Small but complete mission for fast end-to-end checks.
MissionConfig small_mission() {
  MissionConfig cfg = default_mission_config();
  cfg.planner.mission_length = 8;
  cfg.planner.planning_horizon = 4;
  cfg.planner.iteration_budget = 48;
  cfg.planner.rng_seed = 11;
  cfg.sensor_seed = 1011;
  return cfg;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("terminal-reward mission log invariants") {
  const MissionConfig cfg = small_mission();
  const BathymetryField field = make_field(cfg);
  const MissionResult res = rh_execute(cfg, field);
  const MissionLog& log = res.log;

  REQUIRE(log.rows.size() == 9);  // row 0 plus one per step
  CHECK(log.rows.front().bound == log.initial_bound);
  CHECK(log.initial_bound > 0.0);

  double prev_ant = -1.0, prev_real = -1.0;
  for (const auto& row : log.rows) {
    CHECK(row.j_anticipated >= prev_ant);
    CHECK(row.j_realized >= prev_real);
    CHECK(row.bound >= 0.0);
    CHECK(row.j_plus_bound == doctest::Approx(row.j_anticipated + row.bound));
    prev_ant = row.j_anticipated;
    prev_real = row.j_realized;
  }
  CHECK(log.final_j_anticipated == log.rows.back().j_anticipated);
  CHECK(log.final_j_anticipated + 1e-6 >= log.initial_bound);
  CHECK(log.final_j_anticipated + 1e-6 >= log.running_bound);
  CHECK(log.guarantee_ok);

  // the executed path is derivable from the action set and in bounds
  std::string why;
  CHECK_MESSAGE(validate_path(res.executed, cfg.make_actions(), cfg.make_area(), {}, &why), why);
  CHECK(path_steps(res.executed) == 8);

  // retained samples honor the spacing rule
  const auto& s = res.model.data().samples();
  CHECK(s.size() > 8);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      CHECK(distance(s[i].position, s[j].position) >= cfg.gp.retention_radius);
    }
  }

  // sample records carry strictly increasing absolute times
  REQUIRE_FALSE(res.samples.empty());
  for (std::size_t i = 1; i < res.samples.size(); ++i) {
    CHECK(res.samples[i].time_s > res.samples[i - 1].time_s);
  }
}

TEST_CASE("baseline mission runs the same loop without the floors") {
  const MissionConfig cfg = small_mission();
  const BathymetryField field = make_field(cfg);
  const MissionResult res = rh_execute_baseline(cfg, field);
  CHECK(res.log.rows.size() == 9);
  CHECK(path_steps(res.executed) == 8);
  double prev = -1.0;
  for (const auto& row : res.log.rows) {
    CHECK(row.j_anticipated >= prev);
    prev = row.j_anticipated;
  }
}

TEST_CASE("degenerate mission lengths") {
  MissionConfig cfg = small_mission();
  const BathymetryField field = make_field(cfg);

  SUBCASE("one step") {
    cfg.planner.mission_length = cfg.planner.planning_horizon = cfg.planner.execution_horizon = 1;
    const MissionResult res = rh_execute(cfg, field);
    CHECK(res.log.rows.size() == 2);
    CHECK(res.log.final_j_anticipated >= 0.0);
  }

  SUBCASE("zero steps") {
    cfg.planner.mission_length = 0;
    for (auto run : {rh_execute, rh_execute_baseline}) {
      const MissionResult res = run(cfg, field);
      CHECK(res.log.rows.size() == 1);  // just the start-state row
      CHECK(res.log.final_j_anticipated == 0.0);
      CHECK(res.log.initial_bound == 0.0);  // no budget left to promise
      CHECK(res.log.guarantee_ok);
    }
  }
}

TEST_CASE("baseline plan values are the plain anticipated path reward") {
  const MissionConfig cfg = small_mission();
  const OperationalArea area = cfg.make_area();
  const ActionSet acts = cfg.make_actions();
  const PlannerDeps deps{&area, &acts, &cfg.lawnmower, &cfg.reward, false};
  GpModel model(cfg.prior, cfg.gp);
  PlannerConfig pc = cfg.planner;
  pc.iteration_budget = 30;
  const PlanResult plan = plan_epoch(model, cfg.start, {}, 40, pc, deps, 0);
  CHECK(plan.root_bound == 0.0);
  CHECK(plan.terminal_bound == 0.0);
  Path tail(plan.path.begin() + 1, plan.path.end());
  CHECK(plan.value == path_reward(model, tail, cfg.reward).total);
}

TEST_CASE("identical seeds produce identical missions") {
  const MissionConfig cfg = small_mission();
  const BathymetryField field = make_field(cfg);
  const MissionResult a = rh_execute(cfg, field);
  const MissionResult b = rh_execute(cfg, field);
  std::stringstream sa, sb;
  write_mission_log_csv(sa, a.log);
  write_mission_log_csv(sb, b.log);
  CHECK(sa.str() == sb.str());
  std::stringstream ma, mb;
  write_measurements_csv(ma, a.samples);
  write_measurements_csv(mb, b.samples);
  CHECK(ma.str() == mb.str());
}

TEST_CASE("missions run on gridded bathymetry") {
  const auto dir = std::filesystem::temp_directory_path() / "isobath_grid_e2e";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto grid_path = dir / "lake.grid";
  {
    // sample the default analytic lake onto a raster
    const BathymetryField analytic = make_field(default_mission_config());
    GridData g;
    g.ncols = 31;
    g.nrows = 46;
    g.origin_north = 0;
    g.origin_east = 0;
    g.cellsize = 20;
    g.nodata = -9999;
    for (int r = 0; r < g.nrows; ++r) {
      for (int c = 0; c < g.ncols; ++c) {
        g.values.push_back(analytic.depth({r * 20.0, c * 20.0}));
      }
    }
    std::ofstream out(grid_path);
    write_ascii_grid(out, g);
  }
  MissionConfig cfg = small_mission();
  cfg.bathymetry.kind = BathymetryConfig::Kind::kGrid;
  cfg.bathymetry.file = grid_path.string();
  CHECK_NOTHROW(cfg.validate());
  const MissionResult res = rh_execute(cfg, make_field(cfg));
  CHECK(path_steps(res.executed) == 8);
  CHECK(res.log.guarantee_ok);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli run writes every artifact and is byte-stable") {
  const auto dir = std::filesystem::temp_directory_path() / "isobath_cli_e2e";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto cfg_path = dir / "mission.cfg";
  {
    std::ofstream out(cfg_path);
    out << "planner.mission_length = 6\n"
        << "planner.horizon = 3\n"
        << "planner.iterations = 32\n"
        << "run.mode = both\n"
        << "run.out_dir = " << (dir / "out").string() << "\n"
        << "run.grid_resolution = 60\n";
  }
  REQUIRE(validate_config(cfg_path.string()) == 0);
  REQUIRE(run_mission(cfg_path.string()) == 0);
  for (const char* arm : {"terminal", "baseline"}) {
    for (const char* name : {"mission_log.csv", "measurements.csv", "retained.csv",
                             "summary.txt", "posterior_mu.csv", "posterior_sigma.csv",
                             "posterior_ambiguity.csv", "posterior_meta.txt"}) {
      CAPTURE(arm);
      CAPTURE(name);
      CHECK(std::filesystem::exists(dir / "out" / arm / name));
    }
  }

  const std::string first = slurp(dir / "out" / "terminal" / "mission_log.csv");
  REQUIRE(run_mission(cfg_path.string()) == 0);  // same seeds, fresh run
  CHECK(slurp(dir / "out" / "terminal" / "mission_log.csv") == first);
  std::filesystem::remove_all(dir);
}
