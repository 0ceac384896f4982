// Test-side reference implementations, deliberately independent of the
// library's linear algebra: plain arrays and Gaussian elimination with
// partial pivoting, full (non-local) conditioning.

#ifndef ISOBATH_TESTS_ORACLES_HPP
#define ISOBATH_TESTS_ORACLES_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "isobath/gp.hpp"

namespace oracle {

inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) throw std::runtime_error("oracle: singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

inline double se_kernel(const isobath::GeoPoint& p, const isobath::GeoPoint& q,
                        const isobath::GpHyperparams& hp) {
  const double dn = p.north - q.north;
  const double de = p.east - q.east;
  return hp.signal_std * hp.signal_std *
         std::exp(-(dn * dn + de * de) / (2.0 * hp.length_scale * hp.length_scale));
}

// Dense posterior over ALL given samples (no retention, no locality).
inline isobath::Prediction predict_dense(const std::vector<isobath::Datum>& data,
                                         const isobath::GeoPoint& p,
                                         const isobath::GpHyperparams& hp,
                                         const isobath::PriorMeanSpec& mean_spec) {
  const double kpp = se_kernel(p, p, hp);
  if (data.empty()) return {isobath::prior_mean(p, mean_spec), kpp};
  const std::size_t n = data.size();
  std::vector<std::vector<double>> K(n, std::vector<double>(n, 0.0));
  std::vector<double> resid(n, 0.0);
  std::vector<double> kstar(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) K[i][j] = se_kernel(data[i].position, data[j].position, hp);
    K[i][i] += hp.noise_std * hp.noise_std;
    resid[i] = data[i].depth - isobath::prior_mean(data[i].position, mean_spec);
    kstar[i] = se_kernel(p, data[i].position, hp);
  }
  const auto alpha = solve_dense(K, resid);
  const auto w = solve_dense(K, kstar);
  double mean = isobath::prior_mean(p, mean_spec);
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean += kstar[i] * alpha[i];
    quad += kstar[i] * w[i];
  }
  return {mean, kpp - quad};
}

// Dense predictive variance for an arbitrary input set (values irrelevant).
inline double variance_dense(const std::vector<isobath::GeoPoint>& inputs,
                             const isobath::GeoPoint& p, const isobath::GpHyperparams& hp) {
  const double kpp = se_kernel(p, p, hp);
  if (inputs.empty()) return kpp;
  const std::size_t n = inputs.size();
  std::vector<std::vector<double>> K(n, std::vector<double>(n, 0.0));
  std::vector<double> kstar(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) K[i][j] = se_kernel(inputs[i], inputs[j], hp);
    K[i][i] += hp.noise_std * hp.noise_std;
    kstar[i] = se_kernel(p, inputs[i], hp);
  }
  const auto w = solve_dense(K, kstar);
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) quad += kstar[i] * w[i];
  return kpp - quad;
}

}  // namespace oracle

#endif  // ISOBATH_TESTS_ORACLES_HPP
