#include "isobath/reward.hpp"

#include <cmath>
#include <stdexcept>

namespace isobath {

void RewardConfig::validate() const {
  if (!(beta > 0.0)) throw std::invalid_argument("reward: beta must be > 0");
  if (!std::isfinite(level)) throw std::invalid_argument("reward: level must be finite");
}

double ambiguity(const Prediction& pred, const RewardConfig& cfg) {
  return cfg.beta * pred.stddev() - std::abs(pred.mean - cfg.level);
}

double anticipated_ambiguity(const GpModel& model, const GeoPoint& p,
                             std::span<const GeoPoint> planned, const RewardConfig& cfg) {
  const double s = std::sqrt(model.anticipated_variance(p, planned));
  return cfg.beta * s - std::abs(model.predict(p).mean - cfg.level);
}

double self_augmented_variance(double variance, double noise_std) {
  if (variance <= 0.0) return 0.0;
  const double noise = noise_std * noise_std;
  return variance * noise / (variance + noise);
}

double point_reward_terms(double mean, double anticipated_var, double noise_std,
                          const RewardConfig& cfg) {
  const double dist = std::abs(mean - cfg.level);
  const double before = cfg.beta * std::sqrt(std::max(anticipated_var, 0.0)) - dist;
  // The augmented variance is <= the current one, so once the current
  // ambiguity clips to zero the reward is zero.
  if (before <= 0.0) return 0.0;
  const double after =
      cfg.beta * std::sqrt(self_augmented_variance(anticipated_var, noise_std)) - dist;
  return before - std::max(after, 0.0);
}

double point_reward(const GpModel& model, const GeoPoint& p,
                    std::span<const GeoPoint> planned_prefix, const RewardConfig& cfg) {
  return point_reward_terms(model.predict(p).mean,
                            model.anticipated_variance(p, planned_prefix),
                            model.hyperparams().noise_std, cfg);
}

PathValue sequence_reward(const GpModel& model, std::span<const GeoPoint> points,
                          const RewardConfig& cfg) {
  PathValue out;
  out.per_step.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double r = point_reward(model, points[i], points.subspan(0, i), cfg);
    out.per_step.push_back(r);
    out.total += r;
  }
  return out;
}

PathValue path_reward(const GpModel& model, const Path& path, const RewardConfig& cfg) {
  std::vector<GeoPoint> pts;
  pts.reserve(path.size());
  for (const VehicleState& s : path) pts.push_back(s.position);
  return sequence_reward(model, pts, cfg);
}

double realized_reduction(double a_before, double a_after) {
  return std::max(a_before, 0.0) - std::max(a_after, 0.0);
}

}  // namespace isobath
