#include "isobath/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isobath {

ActionSet ActionSet::from_degrees(const std::vector<double>& degrees, double step_length) {
  ActionSet acts;
  acts.step_length = step_length;
  acts.angles.reserve(degrees.size());
  for (double d : degrees) acts.angles.push_back(d * kPi / 180.0);
  acts.validate();
  return acts;
}

void ActionSet::validate() const {
  if (angles.empty()) throw std::invalid_argument("action set: must be non-empty");
  if (!(step_length > 0.0)) throw std::invalid_argument("action set: step length must be > 0");
  for (double a : angles) {
    if (!std::isfinite(a)) throw std::invalid_argument("action set: non-finite angle");
  }
}

double normalize_heading(double heading) {
  double r = std::remainder(heading, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;  // fold -pi onto +pi
  return r;
}

VehicleState step(const VehicleState& s, double action, const ActionSet& acts) {
  if (std::find(acts.angles.begin(), acts.angles.end(), action) == acts.angles.end()) {
    throw std::invalid_argument("step: action not in action set");
  }
  const double h = normalize_heading(s.heading + action);
  return {h, {s.position.north + acts.step_length * std::cos(h),
              s.position.east + acts.step_length * std::sin(h)}};
}

std::vector<std::pair<int, VehicleState>> feasible_moves(const VehicleState& s,
                                                         const ActionSet& acts,
                                                         const OperationalArea& area) {
  std::vector<std::pair<int, VehicleState>> out;
  out.reserve(acts.angles.size());
  for (std::size_t i = 0; i < acts.angles.size(); ++i) {
    VehicleState next = step(s, acts.angles[i], acts);
    if (area.strictly_inside(next.position)) {
      out.emplace_back(static_cast<int>(i), next);
    }
  }
  return out;
}

std::vector<VehicleState> successors(const VehicleState& s, const ActionSet& acts,
                                     const OperationalArea& area) {
  std::vector<VehicleState> out;
  for (auto& [idx, state] : feasible_moves(s, acts, area)) {
    (void)idx;
    out.push_back(state);
  }
  return out;
}

bool validate_path(const Path& path, const ActionSet& acts, const OperationalArea& area,
                   const PathValidationOptions& opts, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (path.empty()) return true;
  if (!area.contains(path.front().position)) return fail("start outside area");
  for (std::size_t i = 1; i < path.size(); ++i) {
    const VehicleState& prev = path[i - 1];
    const VehicleState& cur = path[i];
    bool matched = false;
    for (double a : acts.angles) {
      const double want_h = normalize_heading(prev.heading + a);
      if (std::abs(std::remainder(cur.heading - want_h, 2.0 * kPi)) > opts.tol) continue;
      const GeoPoint want_p{prev.position.north + acts.step_length * std::cos(cur.heading),
                            prev.position.east + acts.step_length * std::sin(cur.heading)};
      if (distance(cur.position, want_p) <= opts.tol) {
        matched = true;
        break;
      }
    }
    if (!matched) return fail("transition " + std::to_string(i) + " not derivable from action set");
    if (!area.contains(cur.position)) {
      return fail("state " + std::to_string(i) + " outside area");
    }
    if (opts.check_segments && !area.segment_inside(prev.position, cur.position)) {
      return fail("segment " + std::to_string(i) + " leaves area");
    }
  }
  return true;
}

}  // namespace isobath
