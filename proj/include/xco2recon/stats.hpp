#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "xco2recon/types.hpp"

namespace xco2::stats {

template <class Derived>
typename Derived::Scalar mean(const Eigen::DenseBase<Derived>& x) {
  return x.derived().array().mean();
}

/// k-th central moment, 1/n normalization.
template <class Derived>
typename Derived::Scalar central_moment(const Eigen::DenseBase<Derived>& x, int k) {
  const auto c = (x.derived().array() - x.derived().array().mean()).eval();
  return c.pow(k).mean();
}

/// Population variance (divide by n).
template <class Derived>
typename Derived::Scalar population_variance(const Eigen::DenseBase<Derived>& x) {
  return central_moment(x, 2);
}

template <class Derived>
typename Derived::Scalar population_stddev(const Eigen::DenseBase<Derived>& x) {
  return std::sqrt(population_variance(x));
}

/// Sample variance (divide by n-1).
template <class Derived>
typename Derived::Scalar sample_variance(const Eigen::DenseBase<Derived>& x) {
  const auto n = static_cast<typename Derived::Scalar>(x.size());
  return central_moment(x, 2) * n / (n - 1);
}

template <class Derived>
typename Derived::Scalar sample_stddev(const Eigen::DenseBase<Derived>& x) {
  return std::sqrt(sample_variance(x));
}

/// m3 / m2^(3/2).
template <class Derived>
typename Derived::Scalar skewness(const Eigen::DenseBase<Derived>& x) {
  const auto m2 = central_moment(x, 2);
  return central_moment(x, 3) / std::pow(m2, 1.5);
}

/// Non-excess kurtosis m4 / m2^2 (normal -> 3).
template <class Derived>
typename Derived::Scalar kurtosis(const Eigen::DenseBase<Derived>& x) {
  const auto m2 = central_moment(x, 2);
  return central_moment(x, 4) / (m2 * m2);
}

/// Percentile with linear interpolation between order statistics
/// (rank position q/100 * (n-1)).
template <class Derived>
typename Derived::Scalar percentile(const Eigen::DenseBase<Derived>& x, double q) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> v(x.derived().data(), x.derived().data() + x.size());
  std::sort(v.begin(), v.end());
  if (v.size() == 1) return v[0];
  const double pos = q / 100.0 * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return static_cast<Scalar>((1.0 - w) * v[lo] + w * v[hi]);
}

template <class DA, class DB>
typename DA::Scalar mse(const Eigen::DenseBase<DA>& pred, const Eigen::DenseBase<DB>& obs) {
  if (pred.size() != obs.size() || pred.size() == 0)
    fail(Errc::length_mismatch, "mse: inputs must be non-empty and equally sized");
  return (pred.derived().array() - obs.derived().array()).square().mean();
}

/// Pearson product-moment correlation. Throws on constant input.
template <class DA, class DB>
typename DA::Scalar pearson_r(const Eigen::DenseBase<DA>& x, const Eigen::DenseBase<DB>& y) {
  if (x.size() != y.size()) fail(Errc::length_mismatch, "pearson_r: size mismatch");
  const auto cx = (x.derived().array() - x.derived().array().mean()).eval();
  const auto cy = (y.derived().array() - y.derived().array().mean()).eval();
  const auto sx = std::sqrt(cx.square().sum());
  const auto sy = std::sqrt(cy.square().sum());
  if (sx == 0 || sy == 0) fail(Errc::constant_input, "pearson_r: constant input");
  return (cx * cy).sum() / (sx * sy);
}

struct OlsFit {
  double slope = 0;
  double intercept = 0;
};

/// Ordinary least squares of y on x.
template <class DA, class DB>
OlsFit ols(const Eigen::DenseBase<DA>& x, const Eigen::DenseBase<DB>& y) {
  if (x.size() != y.size() || x.size() < 2) fail(Errc::length_mismatch, "ols: need >= 2 pairs");
  const auto cx = (x.derived().array() - x.derived().array().mean()).eval();
  const double sxx = cx.square().sum();
  if (sxx == 0) fail(Errc::constant_input, "ols: constant regressor");
  OlsFit fit;
  fit.slope = (cx * (y.derived().array() - y.derived().array().mean())).sum() / sxx;
  fit.intercept = y.derived().array().mean() - fit.slope * x.derived().array().mean();
  return fit;
}

struct KsResult {
  double d = 0;    // sup |ECDF_a - ECDF_b|
  double p = 1;    // asymptotic two-sample p-value
  double n_eff = 0;
};

/// Survival function of the Kolmogorov distribution, Q(lambda) = P(K > lambda).
/// The alternating series is used for large lambda; the theta-function form
/// for small lambda where the alternating series converges too slowly.
double kolmogorov_sf(double lambda);

/// Two-sample Kolmogorov-Smirnov test. p uses the asymptotic distribution
/// with effective n = na*nb/(na+nb).
KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b);

/// Standardized mean difference with pooled (na+nb-2) variance.
double cohens_d(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace xco2::stats
