#include "isobath/lawnmower.hpp"

#include <cmath>
#include <stdexcept>

namespace isobath {

namespace {

int find_angle_index(const ActionSet& acts, double degrees) {
  const double want = degrees * kPi / 180.0;
  for (std::size_t i = 0; i < acts.angles.size(); ++i) {
    if (std::abs(acts.angles[i] - want) < 1e-12) return static_cast<int>(i);
  }
  return -1;
}

struct TurnActions {
  double straight;
  double left;
  double right;
};

TurnActions turn_actions(const ActionSet& acts) {
  const int s = find_angle_index(acts, 0.0);
  const int l = find_angle_index(acts, -90.0);
  const int r = find_angle_index(acts, 90.0);
  if (s < 0 || l < 0 || r < 0) {
    throw std::invalid_argument("lawnmower: action set must contain 0 and +/-90 degrees");
  }
  return {acts.angles[static_cast<std::size_t>(s)],
          acts.angles[static_cast<std::size_t>(l)],
          acts.angles[static_cast<std::size_t>(r)]};
}

// One boustrophedon path. side = +1 offsets to starboard, -1 to port.
// skip_first_leg starts with the turn instead of the full opening leg.
Path build_lawnmower(const VehicleState& s, const OperationalArea& area,
                     const LawnmowerSpec& spec, const ActionSet& acts, int budget,
                     int side, bool skip_first_leg) {
  const TurnActions turn = turn_actions(acts);
  const int leg_steps =
      std::max(1, static_cast<int>(std::floor(spec.leg_length / acts.step_length)));
  const int gap_steps =
      std::max(0, static_cast<int>(std::lround(spec.track_spacing / acts.step_length)) - 1);

  Path path{s};
  int budget_left = budget;
  auto try_step = [&](double angle) {
    if (budget_left <= 0) return false;
    VehicleState next = step(path.back(), angle, acts);
    if (!area.strictly_inside(next.position)) return false;
    path.push_back(next);
    --budget_left;
    return true;
  };
  auto run_leg = [&](int steps) {
    for (int k = 0; k < steps; ++k) {
      if (!try_step(turn.straight)) return false;
    }
    return true;
  };

  if (!skip_first_leg) run_leg(leg_steps);
  int turn_sign = side;
  for (int leg = 0; leg < spec.max_legs && budget_left > 0; ++leg) {
    // U-turn: quarter turn, straight filler sets the track spacing, quarter turn.
    const double quarter = turn_sign > 0 ? turn.right : turn.left;
    if (!try_step(quarter)) break;
    bool ok = run_leg(gap_steps);
    if (ok) ok = try_step(quarter);
    if (!ok) break;
    run_leg(leg_steps - 1);  // the closing quarter turn already advanced one step
    turn_sign = -turn_sign;  // alternate so legs keep offsetting to one side
  }
  return path;
}

}  // namespace

void LawnmowerSpec::validate(const ActionSet& acts) const {
  if (!(track_spacing > 0.0)) throw std::invalid_argument("lawnmower: track_spacing must be > 0");
  if (!(leg_length >= acts.step_length)) {
    throw std::invalid_argument("lawnmower: leg_length must be >= step length");
  }
  if (max_legs < 1) throw std::invalid_argument("lawnmower: max_legs must be >= 1");
  turn_actions(acts);
}

std::vector<Path> lawnmower_pair(const VehicleState& s, const OperationalArea& area,
                                 const LawnmowerSpec& spec, const ActionSet& acts,
                                 int budget) {
  budget = std::max(budget, 0);
  std::vector<Path> out;
  switch (spec.turn_side) {
    case TurnSide::kLeft:
      out.push_back(build_lawnmower(s, area, spec, acts, budget, -1, false));
      out.push_back(build_lawnmower(s, area, spec, acts, budget, -1, true));
      break;
    case TurnSide::kRight:
      out.push_back(build_lawnmower(s, area, spec, acts, budget, +1, false));
      out.push_back(build_lawnmower(s, area, spec, acts, budget, +1, true));
      break;
    case TurnSide::kTowardFirstFeasible: {
      Path right = build_lawnmower(s, area, spec, acts, budget, +1, false);
      Path left = build_lawnmower(s, area, spec, acts, budget, -1, false);
      // When only one side produced any motion, pair it with the variant
      // that turns immediately instead of running the opening leg.
      if (path_steps(right) == 0 && path_steps(left) > 0) {
        right = build_lawnmower(s, area, spec, acts, budget, -1, true);
      } else if (path_steps(left) == 0 && path_steps(right) > 0) {
        left = build_lawnmower(s, area, spec, acts, budget, +1, true);
      }
      out.push_back(std::move(right));
      out.push_back(std::move(left));
      break;
    }
  }
  return out;
}

ValueToGo value_to_go(const GpModel& model, const VehicleState& s, int remaining,
                      const OperationalArea& area, const LawnmowerSpec& spec,
                      const ActionSet& acts, const RewardConfig& reward_cfg) {
  ValueToGo out;
  out.witness = {s};
  if (remaining <= 0) return out;
  bool first = true;
  for (Path& path : lawnmower_pair(s, area, spec, acts, remaining)) {
    std::vector<GeoPoint> waypoints;
    waypoints.reserve(path.size());
    for (std::size_t i = 1; i < path.size(); ++i) waypoints.push_back(path[i].position);
    const double value = sequence_reward(model, waypoints, reward_cfg).total;
    if (first || value > out.bound) {
      out.bound = value;
      out.witness = std::move(path);
      first = false;
    }
  }
  return out;
}

}  // namespace isobath
