#ifndef ISOBATH_LAWNMOWER_HPP
#define ISOBATH_LAWNMOWER_HPP

#include "isobath/reward.hpp"
#include "isobath/vehicle.hpp"

namespace isobath {

enum class TurnSide {
  kTowardFirstFeasible,  ///< try both offset sides, fall back as needed
  kLeft,
  kRight,
};

/**
 * Boustrophedon survey parameters. Legs run parallel to the start heading;
 * U-turns are built from two 90-degree steps with straight filler between
 * them, so the realized track spacing is track_spacing rounded to the
 * nearest multiple of the step length (minimum one step).
 */
struct LawnmowerSpec {
  double track_spacing = 40.0;  ///< meters, snapped to the step-length lattice
  double leg_length = 400.0;    ///< meters per straight leg
  int max_legs = 1000;          ///< legs generated before giving up (budget truncates first)
  TurnSide turn_side = TurnSide::kTowardFirstFeasible;

  /// Requires 0 and +/-90 degrees in the action set, which the turn template uses.
  void validate(const ActionSet& acts) const;
};

struct ValueToGo {
  double bound = 0.0;  ///< anticipated reward of the best generated lawnmower
  Path witness;        ///< the path attaining the bound (starts at the query state)
};

/// Two boustrophedon paths from s (one per offset side when both are
/// feasible), each feasible under the action set, inside the area, and
/// truncated to `budget` steps. Near a boundary a path may have 0 steps.
std::vector<Path> lawnmower_pair(const VehicleState& s, const OperationalArea& area,
                                 const LawnmowerSpec& spec, const ActionSet& acts,
                                 int budget);

/// Lower bound on the reward obtainable from s with `remaining` steps:
/// the best anticipated reward among the generated lawnmower paths.
/// Rewards are summed over the waypoints after s (the state itself was
/// already sampled on arrival). Zero when remaining == 0.
ValueToGo value_to_go(const GpModel& model, const VehicleState& s, int remaining,
                      const OperationalArea& area, const LawnmowerSpec& spec,
                      const ActionSet& acts, const RewardConfig& reward_cfg);

}  // namespace isobath

#endif  // ISOBATH_LAWNMOWER_HPP
