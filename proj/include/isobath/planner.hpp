#ifndef ISOBATH_PLANNER_HPP
#define ISOBATH_PLANNER_HPP

#include <functional>
#include <span>
#include <vector>

#include "isobath/config.hpp"
#include "isobath/lawnmower.hpp"
#include "isobath/sim.hpp"

namespace isobath {

/// Search-tree node statistics. best_value is the maximum value backed up
/// through the node, not the average.
struct MctsNode {
  VehicleState state;
  int depth = 0;
  int parent = -1;
  int visit_count = 0;
  double best_value = 0.0;
  bool evaluated = false;  ///< a rollout has passed through this node
};

/// Modified UCT: normalized exploitation of the best backed-up value plus
/// the usual exploration bonus. Unvisited children score +infinity. A
/// non-positive normalizer zeroes the exploitation term.
double uct_score(const MctsNode& child, int parent_visits, double exploration,
                 double normalizer);

enum class IncumbentSource { kPreviousRemainder, kLawnmower, kMcts };

struct PlanResult {
  Path path;                    ///< states including the root
  double value = 0.0;           ///< anticipated J of path + value_to_go at its end
  double terminal_bound = 0.0;  ///< value_to_go at the returned path's terminal state
  double root_bound = 0.0;      ///< value_to_go at the root (B at the current state)
  double incumbent_value = 0.0; ///< recomputed value of the carried remainder (0 if none)
  IncumbentSource incumbent_source = IncumbentSource::kMcts;
  std::vector<MctsNode> tree;   ///< filled when PlannerConfig::capture_tree is set
};

struct PlannerDeps {
  const OperationalArea* area = nullptr;
  const ActionSet* actions = nullptr;
  const LawnmowerSpec* lawnmower = nullptr;
  const RewardConfig* reward = nullptr;
  bool terminal_rewards = true;
};

/// Observer called once per rollout with the tree nodes it traversed
/// (root first) and the rollout's value.
using RolloutObserver = std::function<void(std::span<const int>, double)>;

/**
 * One planning epoch of the modified-UCT search.
 *
 * Candidates are the carried remainder of the previous plan, the best
 * lawnmower path from the root (full remaining budget, terminal-rewards
 * arm only), and every rollout; each is valued as its anticipated reward
 * plus the value-to-go at its final state. The returned value therefore
 * never falls below the root lawnmower bound or the recomputed incumbent
 * value, which is exactly what the receding-horizon guarantee needs.
 * Deterministic for a fixed seed (the epoch index is mixed into the seed).
 */
PlanResult plan_epoch(const GpModel& model, const VehicleState& root, const Path& incumbent,
                      int remaining, const PlannerConfig& cfg, const PlannerDeps& deps,
                      int epoch_index = 0, const RolloutObserver& observer = {});

struct MissionStepRecord {
  int step = 0;             ///< 1-based executed step; row 0 is the initial state
  GeoPoint waypoint;
  double j_anticipated = 0.0;  ///< cumulative anticipated reward credited so far
  double j_realized = 0.0;     ///< cumulative realized ambiguity reduction
  double bound = 0.0;          ///< B at the state after this step, remaining budget
  double j_plus_bound = 0.0;
  double epoch_ms = 0.0;       ///< simulated duration of this step (transit + dwell)
};

struct SampleRecord {
  double time_s = 0.0;  ///< absolute mission time
  GeoPoint position;
  double depth = 0.0;
  bool retained = false;
};

struct MissionLog {
  std::vector<MissionStepRecord> rows;  ///< rows[0] is the start state
  double initial_bound = 0.0;           ///< B at the start state, full budget
  double running_bound = 0.0;              ///< max over rows of J + B
  double final_j_anticipated = 0.0;
  double final_j_realized = 0.0;
  bool guarantee_ok = false;            ///< final J >= the running bound (1e-6 slack)
  bool dead_end = false;                ///< mission stopped early at a dead end
};

struct MissionResult {
  MissionLog log;
  GpModel model;                 ///< posterior model at mission end
  Path executed;                 ///< the receding-horizon path actually flown
  std::vector<Path> plans;       ///< selected plan per epoch (diagnostics)
  std::vector<SampleRecord> samples;
  double planning_wall_ms = 0.0; ///< total wall-clock planning time
};

/// Receding-horizon mission with lawnmower terminal rewards (the guarantee arm).
MissionResult rh_execute(const MissionConfig& cfg, const BathymetryField& field);

/// Comparison arm: same loop with no terminal rewards and no incumbent or
/// lawnmower floor; per-epoch values are the plain anticipated reward of
/// the best rollout.
MissionResult rh_execute_baseline(const MissionConfig& cfg, const BathymetryField& field);

}  // namespace isobath

#endif  // ISOBATH_PLANNER_HPP
