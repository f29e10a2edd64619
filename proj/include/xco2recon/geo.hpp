#pragma once

#include <cmath>

namespace xco2 {

inline constexpr double kEarthRadiusKm = 6371.0;

inline double deg2rad(double d) { return d * M_PI / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / M_PI; }

/// Great-circle central angle between two points, in degrees of arc.
/// Uses the atan2 form, which stays well conditioned at small separations.
inline double great_circle_deg(double lat1, double lon1, double lat2, double lon2) {
  const double p1 = deg2rad(lat1), p2 = deg2rad(lat2);
  const double dl = deg2rad(lon2 - lon1);
  const double a = std::cos(p2) * std::sin(dl);
  const double b = std::cos(p1) * std::sin(p2) - std::sin(p1) * std::cos(p2) * std::cos(dl);
  const double num = std::hypot(a, b);
  const double den = std::sin(p1) * std::sin(p2) + std::cos(p1) * std::cos(p2) * std::cos(dl);
  return rad2deg(std::atan2(num, den));
}

inline double arc_deg_to_km(double deg) { return deg2rad(deg) * kEarthRadiusKm; }

inline double great_circle_km(double lat1, double lon1, double lat2, double lon2) {
  return arc_deg_to_km(great_circle_deg(lat1, lon1, lat2, lon2));
}

}  // namespace xco2
