#include "xco2recon/stats.hpp"

namespace xco2::stats {

double kolmogorov_sf(double lambda) {
  if (lambda <= 0) return 1.0;
  if (lambda < 1.18) {
    // Q = 1 - (sqrt(2*pi)/lambda) * sum exp(-(2k-1)^2 pi^2 / (8 lambda^2))
    const double t = M_PI * M_PI / (8.0 * lambda * lambda);
    double cdf = 0;
    for (int k = 1; k <= 100; ++k) {
      const double term = std::exp(-static_cast<double>(2 * k - 1) * (2 * k - 1) * t);
      cdf += term;
      if (term < 1e-17) break;
    }
    cdf *= std::sqrt(2.0 * M_PI) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double q = 0;
  double sign = 1;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    q += sign * term;
    sign = -sign;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * q, 0.0, 1.0);
}

KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) fail(Errc::empty_sample, "ks_two_sample: empty sample");
  std::vector<double> sa(a), sb(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());

  double d = 0;
  std::size_t ia = 0, ib = 0;
  while (ia < sa.size() && ib < sb.size()) {
    const double x = std::min(sa[ia], sb[ib]);
    while (ia < sa.size() && sa[ia] <= x) ++ia;
    while (ib < sb.size() && sb[ib] <= x) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
  }

  KsResult r;
  r.d = d;
  r.n_eff = na * nb / (na + nb);
  r.p = kolmogorov_sf(std::sqrt(r.n_eff) * d);
  return r;
}

double cohens_d(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2) fail(Errc::empty_sample, "cohens_d: need n >= 2 per sample");
  const Eigen::Map<const Vector> va(a.data(), static_cast<Index>(a.size()));
  const Eigen::Map<const Vector> vb(b.data(), static_cast<Index>(b.size()));
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double pooled =
      ((na - 1) * sample_variance(va) + (nb - 1) * sample_variance(vb)) / (na + nb - 2);
  if (pooled <= 0) fail(Errc::zero_pooled_variance, "cohens_d: zero pooled variance");
  return (mean(va) - mean(vb)) / std::sqrt(pooled);
}

}  // namespace xco2::stats
