#pragma once

#include <cmath>

namespace drst {

// Projected planar coordinates in km.
struct Point {
  double x_km = 0.0;
  double y_km = 0.0;
};

inline double distance_km(const Point& a, const Point& b) {
  const double dx = a.x_km - b.x_km;
  const double dy = a.y_km - b.y_km;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace drst
