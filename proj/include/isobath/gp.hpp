#ifndef ISOBATH_GP_HPP
#define ISOBATH_GP_HPP

#include <span>
#include <stdexcept>

#include "isobath/dataset.hpp"
#include "isobath/geometry.hpp"

namespace isobath {

/// Signalled when the regularized kernel system fails its SPD factorization.
/// With a positive noise floor this should be unreachable.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GpHyperparams {
  double signal_std = 5.0;       ///< sigma_f, meters
  double length_scale = 40.0;    ///< l_c, meters
  double noise_std = 2.5;        ///< sigma_n, meters
  double locality_radius = 40.0; ///< delta_c: data within this radius of the query is used
  double retention_radius = 6.0; ///< delta_f: minimum spacing between retained samples

  /// Throws std::invalid_argument on out-of-range values. retention_radius
  /// of 0 (keep everything) is allowed for offline/diagnostic use; mission
  /// configs are validated more strictly.
  void validate() const;
};

/// Prior mean: a ridge of depth max_depth along the line through line_a and
/// line_b, falling off with the square of distance and clamped at zero:
///   m(p) = max(max_depth * (1 - (d(p, line)/falloff_scale)^2), 0)
struct PriorMeanSpec {
  GeoPoint line_a{0.0, 0.0};
  GeoPoint line_b{1.0, 0.0};
  double falloff_scale = 300.0;  ///< c, meters
  double max_depth = 25.0;       ///< d_max, meters

  void validate() const;
};

struct Prediction {
  double mean = 0.0;      ///< meters
  double variance = 0.0;  ///< meters^2
  double stddev() const;
};

/// Squared exponential covariance sigma_f^2 * exp(-|p-q|^2 / (2 l_c^2)).
double kernel(const GeoPoint& p, const GeoPoint& q, const GpHyperparams& hp);

double prior_mean(const GeoPoint& p, const PriorMeanSpec& spec);

/**
 * Sparse local Gaussian-process depth model.
 *
 * Samples are thinned on insertion (retention_radius) and predictions use
 * only the data within locality_radius of the query point, so the dense
 * solve stays small no matter how long the mission runs. The model is
 * immutable during a planning epoch: predict/anticipated_* are const and
 * safe to call concurrently; insertions must not overlap reads.
 */
class GpModel {
 public:
  GpModel(PriorMeanSpec mean_spec, GpHyperparams hp);

  bool maybe_insert(const Datum& d) { return data_.maybe_insert(d); }

  /// Posterior predictive mean/variance at p from the local data subset.
  /// Falls back to the prior predictive (m(p), k(p,p)) with no local data.
  Prediction predict(const GeoPoint& p) const;

  /// Predictive variance at p when the input set is augmented with the
  /// planned-but-unmeasured points (those within locality_radius of p).
  /// No measurement values are involved; with empty `planned` this equals
  /// predict(p).variance exactly.
  double anticipated_variance(const GeoPoint& p, std::span<const GeoPoint> planned) const;
  double anticipated_std(const GeoPoint& p, std::span<const GeoPoint> planned) const;

  const Dataset& data() const { return data_; }
  const GpHyperparams& hyperparams() const { return hp_; }
  const PriorMeanSpec& mean_spec() const { return mean_spec_; }

 private:
  PriorMeanSpec mean_spec_;
  GpHyperparams hp_;
  Dataset data_;
};

}  // namespace isobath

#endif  // ISOBATH_GP_HPP
