#include "isobath/planner.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

namespace isobath {

double uct_score(const MctsNode& child, int parent_visits, double exploration,
                 double normalizer) {
  if (child.visit_count == 0) return std::numeric_limits<double>::infinity();
  const double exploit = normalizer > 0.0 ? child.best_value / normalizer : 0.0;
  const double n_parent = std::max(parent_visits, 1);
  return exploit + exploration * std::sqrt(std::log(n_parent) / child.visit_count);
}

namespace {

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

struct PointKey {
  std::uint64_t n, e;
  bool operator==(const PointKey&) const = default;
};
struct PointKeyHash {
  std::size_t operator()(const PointKey& k) const {
    return static_cast<std::size_t>(mix(k.n, k.e));
  }
};

struct StateKey {
  std::uint64_t n, e, h;
  int remaining;
  bool operator==(const StateKey&) const = default;
};
struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    return static_cast<std::size_t>(
        mix(mix(mix(k.n, k.e), k.h), static_cast<std::uint64_t>(k.remaining)));
  }
};

// Per-epoch evaluation context over an immutable model snapshot. The
// predictive mean at a point does not depend on planned prefixes, so it is
// memoized; cached results are the same doubles the uncached reward-module
// path computes, keeping plan values bit-identical to sequence_reward and
// value_to_go.
class EpochEvaluator {
 public:
  EpochEvaluator(const GpModel& model, const PlannerDeps& deps)
      : model_(model), deps_(deps) {}

  double mean_at(const GeoPoint& p) {
    const PointKey key{bits(p.north), bits(p.east)};
    auto it = means_.find(key);
    if (it != means_.end()) return it->second;
    const double m = model_.predict(p).mean;
    means_.emplace(key, m);
    return m;
  }

  double sequence_value(std::span<const GeoPoint> pts) {
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      total += point_reward_terms(mean_at(pts[i]),
                                  model_.anticipated_variance(pts[i], pts.subspan(0, i)),
                                  model_.hyperparams().noise_std, *deps_.reward);
    }
    return total;
  }

  double tail_value(const Path& path) {
    std::vector<GeoPoint> pts;
    pts.reserve(path.size());
    for (std::size_t i = 1; i < path.size(); ++i) pts.push_back(path[i].position);
    return sequence_value(pts);
  }

  /// value_to_go(...).bound with per-epoch caching.
  double vtg(const VehicleState& s, int remaining) {
    if (remaining <= 0) return 0.0;
    const StateKey key{bits(s.position.north), bits(s.position.east), bits(s.heading), remaining};
    auto it = vtg_.find(key);
    if (it != vtg_.end()) return it->second;
    const double b = best_lawnmower(s, remaining).second;
    vtg_.emplace(key, b);
    return b;
  }

  std::pair<Path, double> best_lawnmower(const VehicleState& s, int remaining) {
    Path best{s};
    double best_value = 0.0;
    if (remaining <= 0) return {best, best_value};
    bool first = true;
    for (Path& path : lawnmower_pair(s, *deps_.area, *deps_.lawnmower, *deps_.actions,
                                     remaining)) {
      const double value = tail_value(path);
      if (first || value > best_value) {
        best_value = value;
        best = std::move(path);
        first = false;
      }
    }
    return {best, best_value};
  }

 private:
  const GpModel& model_;
  const PlannerDeps& deps_;
  std::unordered_map<PointKey, double, PointKeyHash> means_;
  std::unordered_map<StateKey, double, StateKeyHash> vtg_;
};

struct ArenaNode {
  VehicleState state;
  int depth = 0;
  int parent = -1;
  int visits = 0;
  double best = 0.0;
  bool evaluated = false;
  std::vector<std::pair<int, VehicleState>> moves;
  std::vector<int> children;  // parallel to moves, -1 until expanded
  int expanded = 0;
};

}  // namespace

PlanResult plan_epoch(const GpModel& model, const VehicleState& root, const Path& incumbent,
                      int remaining, const PlannerConfig& cfg, const PlannerDeps& deps,
                      int epoch_index, const RolloutObserver& observer) {
  cfg.validate();
  EpochEvaluator eval(model, deps);
  const int horizon = std::min(cfg.planning_horizon, remaining);

  PlanResult result;
  bool have_best = false;
  auto consider = [&](Path path, double value, double tbound, IncumbentSource src) {
    if (!have_best || value > result.value) {
      result.path = std::move(path);
      result.value = value;
      result.terminal_bound = tbound;
      result.incumbent_source = src;
      have_best = true;
    }
  };

  // Carried remainder of the previous plan, revalued against the current model.
  if (path_steps(incumbent) >= 1) {
    const double w = eval.tail_value(incumbent);
    const double b =
        deps.terminal_rewards ? eval.vtg(incumbent.back(), remaining - path_steps(incumbent)) : 0.0;
    result.incumbent_value = w + b;
    consider(incumbent, w + b, b, IncumbentSource::kPreviousRemainder);
  }

  // Best lawnmower from the root, full remaining budget. Seeding the search
  // with it pins the plan value to at least the value-to-go bound.
  if (deps.terminal_rewards) {
    auto [lm_path, lm_value] = eval.best_lawnmower(root, remaining);
    result.root_bound = lm_value;
    const int lm_steps = path_steps(lm_path);
    const double b = lm_steps < remaining ? eval.vtg(lm_path.back(), remaining - lm_steps) : 0.0;
    consider(std::move(lm_path), lm_value + b, b, IncumbentSource::kLawnmower);
  }

  std::mt19937_64 rng(cfg.rng_seed ^
                      (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(epoch_index + 1)));

  std::vector<ArenaNode> arena;
  auto make_node = [&](const VehicleState& s, int depth, int parent) {
    ArenaNode node;
    node.state = s;
    node.depth = depth;
    node.parent = parent;
    if (depth < horizon) {
      node.moves = feasible_moves(s, *deps.actions, *deps.area);
      node.children.assign(node.moves.size(), -1);
    }
    arena.push_back(std::move(node));
    return static_cast<int>(arena.size()) - 1;
  };
  make_node(root, 0, -1);

  // The UCT normalizer tracks the best value seen this epoch, and starts at
  // the initial incumbent so early rollouts are judged against it.
  double normalizer = have_best ? result.value : 0.0;

  std::vector<int> tree_path;
  std::vector<VehicleState> states;
  if (!arena[0].moves.empty()) {
    for (int iter = 0; iter < cfg.iteration_budget; ++iter) {
      tree_path.assign(1, 0);
      states.assign(1, root);
      int cur = 0;
      while (true) {
        ArenaNode& node = arena[static_cast<std::size_t>(cur)];
        if (node.depth == horizon || node.moves.empty()) break;
        if (node.expanded < static_cast<int>(node.moves.size())) {
          const int mi = node.expanded++;
          const int child = make_node(node.moves[static_cast<std::size_t>(mi)].second,
                                      node.depth + 1, cur);
          arena[static_cast<std::size_t>(cur)].children[static_cast<std::size_t>(mi)] = child;
          tree_path.push_back(child);
          states.push_back(arena[static_cast<std::size_t>(child)].state);
          break;
        }
        // Fully expanded: descend along the best UCT child, first index wins ties.
        int pick = -1;
        double pick_score = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < node.children.size(); ++c) {
          const ArenaNode& ch = arena[static_cast<std::size_t>(node.children[c])];
          const MctsNode view{ch.state, ch.depth, ch.parent, ch.visits, ch.best, ch.evaluated};
          const double score = uct_score(view, node.visits, cfg.exploration, normalizer);
          if (score > pick_score) {
            pick_score = score;
            pick = node.children[c];
          }
        }
        cur = pick;
        tree_path.push_back(cur);
        states.push_back(arena[static_cast<std::size_t>(cur)].state);
      }

      // Random rollout past the tree frontier.
      VehicleState s = states.back();
      while (static_cast<int>(states.size()) - 1 < horizon) {
        const auto moves = feasible_moves(s, *deps.actions, *deps.area);
        if (moves.empty()) break;
        s = moves[rng() % moves.size()].second;
        states.push_back(s);
      }

      const int steps = static_cast<int>(states.size()) - 1;
      std::vector<GeoPoint> pts;
      pts.reserve(static_cast<std::size_t>(steps));
      for (int i = 1; i <= steps; ++i) pts.push_back(states[static_cast<std::size_t>(i)].position);
      const double w = eval.sequence_value(pts);
      const double b = deps.terminal_rewards ? eval.vtg(states.back(), remaining - steps) : 0.0;
      const double value = w + b;

      for (int id : tree_path) {
        ArenaNode& node = arena[static_cast<std::size_t>(id)];
        node.visits += 1;
        if (!node.evaluated || value > node.best) {
          node.best = value;
          node.evaluated = true;
        }
      }
      normalizer = std::max(normalizer, value);
      if (!have_best || value > result.value) {
        consider(Path(states.begin(), states.end()), value, b, IncumbentSource::kMcts);
      }
      if (observer) observer(std::span<const int>(tree_path), value);
    }
  }

  if (!have_best) {
    // Dead-end root with nothing carried over: stay put, worth the (zero)
    // value-to-go from here.
    consider(Path{root}, result.root_bound, result.root_bound, IncumbentSource::kLawnmower);
  }

  assert(result.value >= result.root_bound);
  assert(result.value >= result.incumbent_value);

  if (cfg.capture_tree) {
    result.tree.reserve(arena.size());
    for (const ArenaNode& n : arena) {
      result.tree.push_back(MctsNode{n.state, n.depth, n.parent, n.visits, n.best, n.evaluated});
    }
  }
  return result;
}

namespace {

MissionResult rh_execute_impl(const MissionConfig& cfg, const BathymetryField& field,
                              bool terminal_rewards) {
  cfg.validate();
  const OperationalArea area = cfg.make_area();
  const ActionSet acts = cfg.make_actions();
  const PlannerDeps deps{&area, &acts, &cfg.lawnmower, &cfg.reward, terminal_rewards};

  MissionResult res{MissionLog{}, GpModel(cfg.prior, cfg.gp), Path{}, {}, {}, 0.0};
  GpModel& model = res.model;
  std::mt19937_64 sensor_rng(cfg.sensor_seed);

  VehicleState state = cfg.start;
  const int mission_length = cfg.planner.mission_length;
  int executed = 0;
  double j_ant = 0.0;
  double j_real = 0.0;
  double clock_s = 0.0;

  auto bound_at = [&](const VehicleState& s, int rem) {
    return value_to_go(model, s, rem, area, cfg.lawnmower, acts, cfg.reward).bound;
  };

  res.log.initial_bound = bound_at(state, mission_length);
  res.log.rows.push_back({0, state.position, 0.0, 0.0, res.log.initial_bound,
                          res.log.initial_bound, 0.0});
  res.executed.push_back(state);
  double running_bound = res.log.initial_bound;

  Path incumbent;
  int epoch = 0;
  while (executed < mission_length) {
    const int remaining = mission_length - executed;
    const auto t0 = std::chrono::steady_clock::now();
    PlanResult plan = plan_epoch(model, state, incumbent, remaining, cfg.planner, deps, epoch);
    res.planning_wall_ms +=
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ++epoch;
    if (path_steps(plan.path) == 0) {
      res.log.dead_end = true;
      break;
    }
    res.plans.push_back(plan.path);

    const int exec = std::min({cfg.planner.execution_horizon, path_steps(plan.path), remaining});

    std::vector<double> step_durations;
    std::vector<double> step_j_real;
    for (int i = 1; i <= exec; ++i) {
      const VehicleState next = plan.path[static_cast<std::size_t>(i)];
      const double a_before = ambiguity(model.predict(next.position), cfg.reward);

      const MeasurementStream stream =
          traverse_segment(state.position, next.position, field, cfg.sensor, sensor_rng);
      std::vector<std::uint8_t> kept;
      ingest(model, stream, &kept);
      for (std::size_t k = 0; k < stream.size(); ++k) {
        res.samples.push_back(
            {clock_s + stream[k].time_s, stream[k].position, stream[k].depth, kept[k] != 0});
      }
      const double step_duration_s =
          distance(state.position, next.position) / cfg.sensor.speed + cfg.sensor.dwell_s;
      clock_s += step_duration_s;
      step_durations.push_back(step_duration_s);

      const double a_after = ambiguity(model.predict(next.position), cfg.reward);
      j_real += std::max(realized_reduction(a_before, a_after), 0.0);
      step_j_real.push_back(j_real);
      state = next;
      ++executed;
      res.executed.push_back(state);
    }

    // Close the epoch's books: credit the part of the committed plan value
    // that the updated model no longer carries in the remainder. An empty
    // remainder is the zero-length path at the current state, worth the
    // value-to-go there. With a static model this credit reduces exactly to
    // the executed waypoints' anticipated rewards; under model updates it
    // absorbs the revaluation, so the bank J plus the live plan value never
    // decreases and the final J ends at or above every recorded J + B row.
    Path remainder;
    if (path_steps(plan.path) > exec) {
      remainder.assign(plan.path.begin() + exec, plan.path.end());
    }
    const double bound_here = bound_at(state, mission_length - executed);
    double remainder_value = 0.0;
    if (path_steps(remainder) >= 1) {
      Path tail(remainder.begin() + 1, remainder.end());
      remainder_value = path_reward(model, tail, cfg.reward).total;
      if (terminal_rewards) {
        remainder_value += bound_at(remainder.back(),
                                    (remaining - exec) - path_steps(remainder));
      }
    } else if (terminal_rewards) {
      remainder_value = bound_here;
    }
    j_ant += std::max(0.0, plan.value - remainder_value);

    // One row per executed step; the epoch's credit lands on its last row
    // (with the default single-step execution horizon that is every row).
    // The running bound is taken over planning states, i.e. the rows that
    // close an epoch.
    for (int i = 0; i < exec; ++i) {
      const int step_index = executed - exec + i + 1;
      const bool closes_epoch = i + 1 == exec;
      const VehicleState& s = res.executed[static_cast<std::size_t>(step_index)];
      const double row_j = closes_epoch ? j_ant : res.log.rows.back().j_anticipated;
      const double bk = closes_epoch ? bound_here : bound_at(s, mission_length - step_index);
      res.log.rows.push_back({step_index, s.position, row_j,
                              step_j_real[static_cast<std::size_t>(i)], bk, row_j + bk,
                              step_durations[static_cast<std::size_t>(i)] * 1000.0});
      if (closes_epoch) running_bound = std::max(running_bound, row_j + bk);
    }

    incumbent = terminal_rewards ? remainder : Path{};
  }

  res.log.final_j_anticipated = j_ant;
  res.log.final_j_realized = j_real;
  res.log.running_bound = running_bound;
  res.log.guarantee_ok = j_ant + 1e-6 >= running_bound;
  return res;
}

}  // namespace

MissionResult rh_execute(const MissionConfig& cfg, const BathymetryField& field) {
  return rh_execute_impl(cfg, field, true);
}

MissionResult rh_execute_baseline(const MissionConfig& cfg, const BathymetryField& field) {
  return rh_execute_impl(cfg, field, false);
}

}  // namespace isobath
