#ifndef ISOBATH_VEHICLE_HPP
#define ISOBATH_VEHICLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "isobath/geometry.hpp"

namespace isobath {

/// Planar vehicle state: heading in radians, normalized to (-pi, pi],
/// with 0 pointing north and positive toward east.
struct VehicleState {
  double heading = 0.0;
  GeoPoint position;
};

/// Discrete turn set plus the fixed advance per step.
struct ActionSet {
  std::vector<double> angles;  ///< radians, applied as heading increments
  double step_length = 30.0;   ///< d_m, meters

  static ActionSet from_degrees(const std::vector<double>& degrees, double step_length);
  void validate() const;
};

using Path = std::vector<VehicleState>;

/// Number of steps (transitions) in a path; a bare start state has 0.
inline int path_steps(const Path& p) {
  return p.empty() ? 0 : static_cast<int>(p.size()) - 1;
}

double normalize_heading(double heading);

/// One step of the discrete dynamics: the heading turns by `action` and the
/// position advances step_length along the new heading. Throws
/// std::invalid_argument when the action is not in the set.
VehicleState step(const VehicleState& s, double action, const ActionSet& acts);

/// States reachable in one step that land strictly inside the area,
/// in action order. May be empty at a tight corner.
std::vector<VehicleState> successors(const VehicleState& s, const ActionSet& acts,
                                     const OperationalArea& area);

/// Like successors(), but keeps the index of the action that produced each state.
std::vector<std::pair<int, VehicleState>> feasible_moves(const VehicleState& s,
                                                         const ActionSet& acts,
                                                         const OperationalArea& area);

struct PathValidationOptions {
  bool check_segments = false;  ///< also require whole segments inside the area
  double tol = 1e-9;
};

/// Re-derives every transition from the action set and checks containment.
/// On failure, `why` (if given) receives a short description.
bool validate_path(const Path& path, const ActionSet& acts, const OperationalArea& area,
                   const PathValidationOptions& opts = {}, std::string* why = nullptr);

}  // namespace isobath

#endif  // ISOBATH_VEHICLE_HPP
