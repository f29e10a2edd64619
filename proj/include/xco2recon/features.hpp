#pragma once

#include <array>
#include <optional>
#include <utility>

#include "xco2recon/grid.hpp"
#include "xco2recon/types.hpp"

namespace xco2 {

inline constexpr int kFeatureCount = 23;

/// External environmental predictors for one (cell, month).
struct EnvironmentalRow {
  double temp_k = NAN;
  double precip_mm = NAN;
  double wind_ms = NAN;
  double pressure_pa = NAN;
  double ndvi = NAN;
  double evi = NAN;
  double elev_m = NAN;
  double slope_deg = NAN;
  double cropland_frac = NAN;

  bool complete() const;
  std::array<double, 9> as_array() const;
};

struct FeatureInfo {
  const char* name;
  const char* source;  // temporal | seasonal | geometric | cross | environmental
};

/// Fixed 23-slot roster; order is part of the model contract.
const std::array<FeatureInfo, kFeatureCount>& feature_registry();

/// sin/cos of the annual and semi-annual cycles, t = doy/365.25.
/// Returns {sin_annual, cos_annual, sin_semiannual, cos_semiannual}.
Eigen::Vector4d temporal_harmonics(double day_of_year);  // throws domain_error

/// Day-of-year of the 15th of `month` in a non-leap calendar; the time
/// coordinate used for monthly samples.
double mid_month_doy(int month);

/// Vegetation-season emphasis: 1.0 for June-August, 0.5 for May/September.
double summer_weight(int month);

struct GeoTerms {
  double lat2, lon2, latlon;
  double dlat, dlon;
  double d_centroid;  // great-circle angle in degrees of arc
};

GeoTerms geo_interactions(double lat, double lon, double centroid_lat, double centroid_lon);

/// exp(-d/5) with d in degrees of arc.
double distance_decay(double d_centroid_deg);

/// Assemble the 23-feature vector for one (cell, month) sample.
/// The centroid defaults to the grid-extent midpoint.
Vector build_feature_vector(const GridCellSeries& cell, int month, const EnvironmentalRow& env,
                            const GridSpec& spec,
                            std::optional<std::pair<double, double>> centroid = std::nullopt);

/// Same inputs expressed by coordinates, for callers without a GridCellSeries.
Vector build_feature_vector_at(double lat, double lon, int month, const EnvironmentalRow& env,
                               const GridSpec& spec,
                               std::optional<std::pair<double, double>> centroid = std::nullopt);

/// Per-feature standardization fitted on the training split only.
class FeatureScaler {
 public:
  /// rows = samples, cols = features. Throws constant_feature.
  static FeatureScaler fit(const Matrix& train_rows);

  Matrix transform(const Matrix& rows) const;
  Vector transform(const Vector& row) const;
  Matrix inverse(const Matrix& rows) const;

  const Vector& mean() const { return mean_; }
  const Vector& stddev() const { return std_; }

 private:
  Vector mean_, std_;
};

/// Fit on the training rows, standardize both sets with the train statistics.
std::pair<std::pair<Matrix, Matrix>, FeatureScaler> fit_apply_scaler(const Matrix& train_rows,
                                                                     const Matrix& all_rows);

}  // namespace xco2
