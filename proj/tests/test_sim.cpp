#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "isobath/sim.hpp"

using namespace isobath;

namespace {

GpHyperparams trial_params() { return GpHyperparams{5.0, 40.0, 2.5, 40.0, 6.0}; }

PriorMeanSpec flat_prior(double depth) {
  PriorMeanSpec spec;
  spec.line_a = {0, 0};
  spec.line_b = {1, 0};
  spec.falloff_scale = 1e9;
  spec.max_depth = depth;
  return spec;
}

GridData small_grid() {
  GridData g;
  g.ncols = 3;
  g.nrows = 2;
  g.origin_north = 0.0;
  g.origin_east = 0.0;
  g.cellsize = 10.0;
  g.nodata = -9999.0;
  g.values = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  return g;
}

}  // namespace

TEST_CASE("analytic field") {
  const auto field = BathymetryField::analytic({{{100, 100}, 21.0, 140.0}});
  CHECK(field.depth({100, 100}) == doctest::Approx(21.0));
  CHECK(field.depth({100, 100 + 140}) == doctest::Approx(21.0 * std::exp(-0.5)));
  CHECK(field.depth({5000, 5000}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gridded field interpolation") {
  const auto field = BathymetryField::gridded(small_grid());
  // exact node values
  CHECK(field.depth({0, 0}) == doctest::Approx(1.0));
  CHECK(field.depth({0, 20}) == doctest::Approx(3.0));
  CHECK(field.depth({10, 0}) == doctest::Approx(4.0));
  // cell center averages the four surrounding nodes
  CHECK(field.depth({5, 5}) == doctest::Approx((1.0 + 2.0 + 4.0 + 5.0) / 4.0));
  // clamped beyond the edges
  CHECK(field.depth({-50, -50}) == doctest::Approx(1.0));
  CHECK(field.depth({50, 50}) == doctest::Approx(6.0));
}

TEST_CASE("ascii grid round trip and nodata handling") {
  std::stringstream ss;
  write_ascii_grid(ss, small_grid());
  const GridData back = read_ascii_grid(ss);
  CHECK(back.ncols == 3);
  CHECK(back.nrows == 2);
  CHECK(back.values == small_grid().values);

  std::stringstream bad("ncols 2\nnrows 2\norigin_north 0\norigin_east 0\ncellsize 5\n"
                        "nodata -1\n1 2 3");
  CHECK_THROWS_AS(read_ascii_grid(bad), std::runtime_error);

  std::stringstream nodata("ncols 2\nnrows 2\norigin_north 0\norigin_east 0\ncellsize 5\n"
                           "nodata -1\n1 -1 3 4");
  const GridData g = read_ascii_grid(nodata);
  CHECK(g.values[1] == 0.0);  // nodata becomes dry ground
}

TEST_CASE("segment traversal sampling") {
  const auto field = BathymetryField::analytic({{{0, 0}, 20.0, 500.0}});
  SensorConfig cfg;  // 10 Hz, 1.6 m/s, 3 s dwell

  SUBCASE("sample counts for a 30 m segment") {
    std::mt19937_64 rng(1);
    const auto stream = traverse_segment({0, 0}, {30, 0}, field, cfg, rng);
    // 30 / 1.6 = 18.75 s of transit -> 187 samples, then 30 dwell samples
    CHECK(stream.size() == 187 + 30);
    int dwell = 0;
    double prev_t = 0.0;
    for (const auto& m : stream) {
      CHECK(m.time_s > prev_t);
      prev_t = m.time_s;
      CHECK(m.position.east == 0.0);
      CHECK(m.position.north >= 0.0);
      CHECK(m.position.north <= 30.0 + 1e-12);
      if (m.position.north == 30.0) ++dwell;
    }
    CHECK(dwell >= 30);
  }

  SUBCASE("zero-noise depths are exact ground truth") {
    SensorConfig quiet = cfg;
    quiet.noise_std = 1e-300;  // validation requires > 0
    std::mt19937_64 rng(2);
    for (const auto& m : traverse_segment({0, 0}, {30, 0}, field, quiet, rng)) {
      CHECK(m.depth == doctest::Approx(field.depth(m.position)).epsilon(1e-12));
    }
  }

  SUBCASE("identical seeds give identical streams") {
    std::mt19937_64 a(42), b(42);
    const auto s1 = traverse_segment({5, 5}, {35, 5}, field, cfg, a);
    const auto s2 = traverse_segment({5, 5}, {35, 5}, field, cfg, b);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
      CHECK(s1[i].depth == s2[i].depth);
      CHECK(s1[i].time_s == s2[i].time_s);
    }
  }

  SUBCASE("noise statistics match the configured deviation") {
    std::mt19937_64 rng(7);
    double sum = 0.0, sum_sq = 0.0;
    int n = 0;
    for (int seg = 0; seg < 60; ++seg) {
      for (const auto& m : traverse_segment({0, double(seg)}, {30, double(seg)}, field, cfg, rng)) {
        const double err = m.depth - field.depth(m.position);
        sum += err;
        sum_sq += err * err;
        ++n;
      }
    }
    REQUIRE(n > 10000);
    const double var = (sum_sq - sum * sum / n) / (n - 1);
    CHECK(std::sqrt(var) == doctest::Approx(2.5).epsilon(0.03));
  }
}

TEST_CASE("ingest thins the stream through the retention rule") {
  const auto field = BathymetryField::analytic({{{0, 0}, 20.0, 500.0}});

  SUBCASE("coincident samples keep exactly one") {
    GpModel model(flat_prior(15.0), trial_params());
    MeasurementStream stream;
    for (int i = 0; i < 25; ++i) stream.push_back({0.1 * (i + 1), {10, 10}, 18.0});
    CHECK(ingest(model, stream) == 1);
    CHECK(model.data().size() == 1);
  }

  SUBCASE("a 30 m pass retains at most 6 samples") {
    GpModel model(flat_prior(15.0), trial_params());
    SensorConfig cfg;
    std::mt19937_64 rng(3);
    const auto stream = traverse_segment({0, 0}, {30, 0}, field, cfg, rng);
    std::vector<std::uint8_t> kept;
    const int n = ingest(model, stream, &kept);
    CHECK(n <= 6);
    CHECK(n >= 5);
    CHECK(kept.size() == stream.size());
    // flags agree with the final dataset
    int flagged = 0;
    for (auto k : kept) flagged += k;
    CHECK(flagged == n);
    // pairwise spacing oracle
    const auto& s = model.data().samples();
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        CHECK(distance(s[i].position, s[j].position) >= 6.0);
      }
    }
  }

  SUBCASE("empty stream") {
    GpModel model(flat_prior(15.0), trial_params());
    CHECK(ingest(model, {}) == 0);
  }
}

TEST_CASE("random basin generation is seeded and in-bounds") {
  BoundingBox box;
  box.expand({0, 0});
  box.expand({900, 600});
  const auto f1 = BathymetryField::random_basins(99, box, 4);
  const auto f2 = BathymetryField::random_basins(99, box, 4);
  REQUIRE(f1.basins().size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(f1.basins()[i].center.north == f2.basins()[i].center.north);
    CHECK(f1.basins()[i].center.north >= 150.0);
    CHECK(f1.basins()[i].center.north <= 750.0);
    CHECK(f1.basins()[i].center.east >= 150.0);
    CHECK(f1.basins()[i].center.east <= 450.0);
  }
}
