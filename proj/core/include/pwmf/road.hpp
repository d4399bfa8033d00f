#pragma once

#include <iosfwd>
#include <vector>

#include "pwmf/gray_image.hpp"

namespace pwmf {

/// ROAD window configuration: radius 1 (3x3) or 2 (5x5), and the number
/// m of smallest absolute neighbor differences to sum.
struct RoadConfig {
  int radius = 1;
  int m = 4;

  int window_diameter() const { return 2 * radius + 1; }
  int neighbor_count() const { return window_diameter() * window_diameter() - 1; }
  void validate() const;  // throws std::invalid_argument
};

/// Per-pixel ROAD values; large values flag likely impulse pixels.
struct RoadMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

/// ROAD(i) = sum of the m smallest |v(i) - v(j)| over window neighbors
/// j != i, borders mirror-reflected.
RoadMap road(const GrayImage& img, const RoadConfig& cfg);

/// exp(-road^2 / (2 sigma_i^2)); near 0 for impulse pixels, near 1 for
/// clean ones. sigma_i must be positive.
double impulse_factor(double road_value, double sigma_i);

/// exp(-((road_i + road_j)/2)^2 / (2 sigma_j^2)); symmetric in (i, j).
double joint_impulse_factor(double road_i, double road_j, double sigma_j);

/// Linear rescale of the ROAD field to [0,255] for visual inspection.
/// A constant map comes out all zero.
GrayImage road_to_image(const RoadMap& map);

/// Exact values as CSV, one image row per line.
void write_road_csv(const RoadMap& map, std::ostream& out);

}  // namespace pwmf
