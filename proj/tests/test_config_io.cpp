#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "isobath/cli.hpp"
#include "isobath/config.hpp"
#include "isobath/io.hpp"

using namespace isobath;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("isobath_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("defaults are self-consistent") {
  const MissionConfig cfg = default_mission_config();
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.gp.signal_std == 5.0);
  CHECK(cfg.gp.length_scale == 40.0);
  CHECK(cfg.gp.noise_std == 2.5);
  CHECK(cfg.gp.retention_radius == 6.0);
  CHECK(cfg.gp.locality_radius == 40.0);
  CHECK(cfg.reward.level == 15.0);
  CHECK(cfg.step_length == 30.0);
  CHECK(cfg.action_angles_deg.size() == 7);
  CHECK(cfg.planner.planning_horizon == 5);
  CHECK(cfg.planner.execution_horizon == 1);
  CHECK(cfg.planner.mission_length == 100);
  CHECK(cfg.sensor.rate_hz == 10.0);
  CHECK(cfg.sensor.speed == 1.6);
  CHECK(cfg.sensor.dwell_s == 3.0);
}

TEST_CASE("the shipped default config file matches the embedded defaults") {
  const std::filesystem::path shipped =
      std::filesystem::path(__FILE__).parent_path().parent_path() / "configs" / "default.cfg";
  REQUIRE(std::filesystem::exists(shipped));
  const MissionConfig from_file = load_mission_config(shipped.string());
  const MissionConfig builtin = default_mission_config();
  CHECK(from_file.gp.signal_std == builtin.gp.signal_std);
  CHECK(from_file.prior.line_a.north == builtin.prior.line_a.north);
  CHECK(from_file.prior.line_b.east == builtin.prior.line_b.east);
  CHECK(from_file.planner.iteration_budget == builtin.planner.iteration_budget);
  CHECK(from_file.planner.rng_seed == builtin.planner.rng_seed);
  CHECK(from_file.sensor_seed == builtin.sensor_seed);
  CHECK(from_file.start.position.north == builtin.start.position.north);
  CHECK(from_file.start.position.east == builtin.start.position.east);
  CHECK(from_file.bathymetry.basins.size() == builtin.bathymetry.basins.size());
  CHECK(from_file.run.mode == builtin.run.mode);
}

TEST_CASE("config parsing") {
  TempDir dir;

  SUBCASE("overrides and comments") {
    const std::string path = dir.file("ok.cfg");
    write_file(path,
               "# comment\n"
               "gp.sigma_f = 4.5\n"
               "reward.beta = 3 # trailing comment\n"
               "vehicle.actions_deg = -90, 0, 90\n"
               "run.mode = both\n");
    const MissionConfig cfg = load_mission_config(path);
    CHECK(cfg.gp.signal_std == 4.5);
    CHECK(cfg.reward.beta == 3.0);
    CHECK(cfg.action_angles_deg.size() == 3);
    CHECK(cfg.run.mode == MissionMode::kBoth);
  }

  SUBCASE("unknown keys carry the line number") {
    const std::string path = dir.file("bad_key.cfg");
    write_file(path, "gp.sigma_f = 5\nnot.a.key = 1\n");
    try {
      load_mission_config(path);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.key() == "not.a.key");
      CHECK(e.line() == 2);
    }
  }

  SUBCASE("malformed numbers are rejected") {
    const std::string path = dir.file("bad_num.cfg");
    write_file(path, "gp.sigma_f = abc\n");
    CHECK_THROWS_AS(load_mission_config(path), ConfigError);
  }

  SUBCASE("invalid cross-field combinations are rejected") {
    const std::string path = dir.file("bad_cross.cfg");
    write_file(path, "vehicle.start_north = -50\n");  // outside the area
    CHECK_THROWS_AS(load_mission_config(path), ConfigError);
  }

  SUBCASE("missing bathymetry grid file") {
    const std::string path = dir.file("bad_grid.cfg");
    write_file(path, "bathymetry.kind = grid\nbathymetry.file = /no/such/file.grid\n");
    CHECK_THROWS_AS(load_mission_config(path), ConfigError);
  }
}

TEST_CASE("posterior dump round-trips at full precision") {
  TempDir dir;
  GpModel model(default_mission_config().prior, default_mission_config().gp);
  model.maybe_insert({{100, 100}, 17.25});
  model.maybe_insert({{140, 120}, 13.5});
  const OperationalArea area({{0, 0}, {200, 0}, {200, 200}, {0, 200}});
  const RewardConfig reward{15.0, 2.0};
  const std::string prefix = dir.file("posterior");
  dump_posterior(model, area, 25.0, reward, prefix);

  const PosteriorGrid grid = evaluate_posterior_grid(model, area, 25.0, reward);
  std::ifstream mu(prefix + "_mu.csv");
  REQUIRE(mu.good());
  const std::vector<double> mu_back = read_csv_matrix(mu);
  REQUIRE(mu_back.size() == grid.mean.size());
  for (std::size_t i = 0; i < mu_back.size(); ++i) {
    CHECK(mu_back[i] == grid.mean[i]);  // exact: %.17g round-trips doubles
  }
  std::ifstream amb(prefix + "_ambiguity.csv");
  const std::vector<double> amb_back = read_csv_matrix(amb);
  REQUIRE(amb_back.size() == grid.ambiguity.size());
  for (std::size_t i = 0; i < amb_back.size(); ++i) {
    // definition recheck, cellwise
    CHECK(amb_back[i] == doctest::Approx(2.0 * grid.stddev[i] -
                                         std::abs(grid.mean[i] - 15.0)).epsilon(1e-12));
    CHECK(grid.stddev[i] <= 5.0 + 1e-9);
  }
}

TEST_CASE("empty-model posterior grid equals the prior mean") {
  const MissionConfig cfg = default_mission_config();
  GpModel model(cfg.prior, cfg.gp);
  const OperationalArea area = cfg.make_area();
  const PosteriorGrid grid = evaluate_posterior_grid(model, area, 50.0, cfg.reward);
  int idx = 0;
  for (int r = 0; r < grid.nrows; ++r) {
    for (int c = 0; c < grid.ncols; ++c, ++idx) {
      const GeoPoint p{grid.origin_north + r * 50.0, grid.origin_east + c * 50.0};
      CHECK(grid.mean[idx] == doctest::Approx(prior_mean(p, cfg.prior)));
      CHECK(grid.stddev[idx] == doctest::Approx(5.0));
    }
  }
}

TEST_CASE("cli exit codes") {
  TempDir dir;

  SUBCASE("missing config file") {
    CHECK(run_mission(dir.file("nope.cfg")) == 1);
    CHECK(validate_config(dir.file("nope.cfg")) == 1);
  }

  SUBCASE("invalid config") {
    const std::string path = dir.file("bad.cfg");
    write_file(path, "gp.sigma_f = -1\n");
    CHECK(run_mission(path) == 1);
  }

  SUBCASE("dump-prior produces grid files") {
    const std::string path = dir.file("ok.cfg");
    write_file(path, std::string("run.out_dir = ") + dir.file("out") + "\n");
    CHECK(dump_prior(path) == 0);
    CHECK(std::filesystem::exists(dir.file("out") + "/prior_mu.csv"));
    CHECK(std::filesystem::exists(dir.file("out") + "/prior_meta.txt"));
  }
}

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, 1.0 / 3.0, -2.5e-17, 123456.789012345678, 5.0}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}
