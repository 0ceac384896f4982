#ifndef ISOBATH_REWARD_HPP
#define ISOBATH_REWARD_HPP

#include <span>
#include <vector>

#include "isobath/gp.hpp"
#include "isobath/vehicle.hpp"

namespace isobath {

struct RewardConfig {
  double level = 15.0;  ///< target isobath, meters
  double beta = 2.0;    ///< confidence multiplier on the predictive std

  void validate() const;
};

struct PathValue {
  double total = 0.0;
  std::vector<double> per_step;
};

/// Ambiguity of a point: beta * sigma - |mu - level|. Negative means the
/// model is confident about which side of the level the depth falls on.
double ambiguity(const Prediction& pred, const RewardConfig& cfg);

/// Ambiguity with the predictive std augmented by planned sample locations.
/// The mean term conditions on acquired data only.
double anticipated_ambiguity(const GpModel& model, const GeoPoint& p,
                             std::span<const GeoPoint> planned, const RewardConfig& cfg);

/// Variance at a point after one more observation of it with noise_std:
/// v * sigma_n^2 / (v + sigma_n^2). Exact rank-one GP update.
double self_augmented_variance(double variance, double noise_std);

/// Reward from (mean, anticipated variance) at a point:
///   max(a_before, 0) - max(a_after, 0)
/// where a_after uses the self-augmented variance. Always >= 0.
double point_reward_terms(double mean, double anticipated_var, double noise_std,
                          const RewardConfig& cfg);

/// Anticipated reduction in ambiguity at p, given the planned points
/// strictly before it in the candidate path.
double point_reward(const GpModel& model, const GeoPoint& p,
                    std::span<const GeoPoint> planned_prefix, const RewardConfig& cfg);

/// Sum of point rewards over a point sequence, with each point's prefix
/// being the points before it in the sequence.
PathValue sequence_reward(const GpModel& model, std::span<const GeoPoint> points,
                          const RewardConfig& cfg);

/// sequence_reward over the positions of all states in a path.
PathValue path_reward(const GpModel& model, const Path& path, const RewardConfig& cfg);

/// Realized reduction in ambiguity at an executed waypoint, from the value
/// at transit start to the value after the post-arrival dwell:
///   max(a_before, 0) - max(a_after, 0).
/// May be negative when new data raises the ambiguity at the waypoint.
double realized_reduction(double a_before, double a_after);

}  // namespace isobath

#endif  // ISOBATH_REWARD_HPP
