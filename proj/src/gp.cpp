#include "isobath/gp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>

namespace isobath {

void GpHyperparams::validate() const {
  if (!(signal_std > 0.0)) throw std::invalid_argument("gp: signal_std must be > 0");
  if (!(length_scale > 0.0)) throw std::invalid_argument("gp: length_scale must be > 0");
  if (!(noise_std > 0.0)) throw std::invalid_argument("gp: noise_std must be > 0");
  if (!(locality_radius > 0.0)) throw std::invalid_argument("gp: locality_radius must be > 0");
  if (retention_radius < 0.0) throw std::invalid_argument("gp: retention_radius must be >= 0");
}

void PriorMeanSpec::validate() const {
  if (!(falloff_scale > 0.0)) throw std::invalid_argument("prior mean: falloff_scale must be > 0");
  if (!(max_depth > 0.0)) throw std::invalid_argument("prior mean: max_depth must be > 0");
  if (!finite(line_a) || !finite(line_b)) {
    throw std::invalid_argument("prior mean: line endpoints must be finite");
  }
  if (line_a.north == line_b.north && line_a.east == line_b.east) {
    throw std::invalid_argument("prior mean: line endpoints must be distinct");
  }
}

double Prediction::stddev() const { return std::sqrt(std::max(variance, 0.0)); }

double kernel(const GeoPoint& p, const GeoPoint& q, const GpHyperparams& hp) {
  const double sf2 = hp.signal_std * hp.signal_std;
  return sf2 * std::exp(-distance_sq(p, q) / (2.0 * hp.length_scale * hp.length_scale));
}

double prior_mean(const GeoPoint& p, const PriorMeanSpec& spec) {
  const double d = point_line_distance(p, spec.line_a, spec.line_b);
  const double ratio = d / spec.falloff_scale;
  return std::max(spec.max_depth * (1.0 - ratio * ratio), 0.0);
}

GpModel::GpModel(PriorMeanSpec mean_spec, GpHyperparams hp)
    : mean_spec_(mean_spec), hp_(hp), data_(hp.retention_radius, hp.locality_radius) {
  hp_.validate();
  mean_spec_.validate();
}

namespace {

// Factor (K + sigma_n^2 I) for the given inputs. Throws on SPD failure.
Eigen::LLT<Eigen::MatrixXd> factor_system(const std::vector<GeoPoint>& inputs,
                                          const GpHyperparams& hp) {
  const Eigen::Index n = static_cast<Eigen::Index>(inputs.size());
  Eigen::MatrixXd K(n, n);
  const double noise = hp.noise_std * hp.noise_std;
  for (Eigen::Index i = 0; i < n; ++i) {
    K(i, i) = kernel(inputs[i], inputs[i], hp) + noise;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = kernel(inputs[i], inputs[j], hp);
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(K);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("gp: kernel system is not positive definite");
  }
  return llt;
}

Eigen::VectorXd cross_covariances(const GeoPoint& p, const std::vector<GeoPoint>& inputs,
                                  const GpHyperparams& hp) {
  Eigen::VectorXd k(static_cast<Eigen::Index>(inputs.size()));
  for (Eigen::Index i = 0; i < k.size(); ++i) {
    k(i) = kernel(p, inputs[static_cast<std::size_t>(i)], hp);
  }
  return k;
}

double posterior_variance(double kpp, const Eigen::LLT<Eigen::MatrixXd>& llt,
                          const Eigen::VectorXd& kstar) {
  const double v = kpp - kstar.dot(llt.solve(kstar));
  return std::max(v, 0.0);
}

}  // namespace

Prediction GpModel::predict(const GeoPoint& p) const {
  const double kpp = kernel(p, p, hp_);
  const auto idx = data_.query_radius(p, hp_.locality_radius);
  if (idx.empty()) return {prior_mean(p, mean_spec_), kpp};

  std::vector<GeoPoint> inputs;
  inputs.reserve(idx.size());
  Eigen::VectorXd residual(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Datum& d = data_.samples()[idx[i]];
    inputs.push_back(d.position);
    residual(static_cast<Eigen::Index>(i)) = d.depth - prior_mean(d.position, mean_spec_);
  }
  const auto llt = factor_system(inputs, hp_);
  const Eigen::VectorXd kstar = cross_covariances(p, inputs, hp_);
  Prediction out;
  out.mean = prior_mean(p, mean_spec_) + kstar.dot(llt.solve(residual));
  out.variance = posterior_variance(kpp, llt, kstar);
  return out;
}

double GpModel::anticipated_variance(const GeoPoint& p, std::span<const GeoPoint> planned) const {
  const double kpp = kernel(p, p, hp_);
  std::vector<GeoPoint> inputs;
  const auto idx = data_.query_radius(p, hp_.locality_radius);
  inputs.reserve(idx.size() + planned.size());
  for (std::uint32_t i : idx) inputs.push_back(data_.samples()[i].position);
  const double r = hp_.locality_radius;
  const double r_sq = r * r;
  for (const GeoPoint& q : planned) {
    if (!std::isfinite(r) || distance_sq(q, p) <= r_sq) inputs.push_back(q);
  }
  if (inputs.empty()) return kpp;
  const auto llt = factor_system(inputs, hp_);
  return posterior_variance(kpp, llt, cross_covariances(p, inputs, hp_));
}

double GpModel::anticipated_std(const GeoPoint& p, std::span<const GeoPoint> planned) const {
  return std::sqrt(anticipated_variance(p, planned));
}

}  // namespace isobath
