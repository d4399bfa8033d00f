#include "pwmf/road.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "pwmf/parallel.hpp"

namespace pwmf {

void RoadConfig::validate() const {
  if (radius != 1 && radius != 2) throw std::invalid_argument("ROAD radius must be 1 or 2");
  if (m < 1 || m > neighbor_count())
    throw std::invalid_argument("ROAD m must be in [1, window size - 1]");
}

RoadMap road(const GrayImage& img, const RoadConfig& cfg) {
  cfg.validate();
  const int r = cfg.radius;
  RoadMap map;
  map.width = img.width;
  map.height = img.height;
  map.values.resize(img.pixel_count());

  parallel_for(0, img.height, [&](std::int64_t y) {
    double diffs[24];  // up to 5x5 window minus center
    for (int x = 0; x < img.width; ++x) {
      const double center = img.at(x, static_cast<int>(y));
      int n = 0;
      for (int dy = -r; dy <= r; ++dy) {
        const int sy = mirror_index(static_cast<int>(y) + dy, img.height);
        for (int dx = -r; dx <= r; ++dx) {
          if (dx == 0 && dy == 0) continue;
          diffs[n++] = std::abs(center - img.at(mirror_index(x + dx, img.width), sy));
        }
      }
      // Sum of the m smallest; the value is tie-order independent.
      std::nth_element(diffs, diffs + (cfg.m - 1), diffs + n);
      double sum = 0.0;
      for (int k = 0; k < cfg.m; ++k) sum += diffs[k];
      map.values[map.width * static_cast<std::size_t>(y) + x] = sum;
    }
  });
  return map;
}

double impulse_factor(double road_value, double sigma_i) {
  if (!(sigma_i > 0.0)) throw std::invalid_argument("sigma_i must be positive");
  return std::exp(-(road_value * road_value) / (2.0 * sigma_i * sigma_i));
}

double joint_impulse_factor(double road_i, double road_j, double sigma_j) {
  if (!(sigma_j > 0.0)) throw std::invalid_argument("sigma_j must be positive");
  const double mean = 0.5 * (road_i + road_j);
  return std::exp(-(mean * mean) / (2.0 * sigma_j * sigma_j));
}

GrayImage road_to_image(const RoadMap& map) {
  GrayImage out(map.width, map.height);
  const auto [lo_it, hi_it] = std::minmax_element(map.values.begin(), map.values.end());
  const double lo = *lo_it;
  const double span = *hi_it - lo;
  for (std::size_t k = 0; k < map.values.size(); ++k)
    out.pixels[k] = span > 0.0 ? (map.values[k] - lo) * 255.0 / span : 0.0;
  return out;
}

void write_road_csv(const RoadMap& map, std::ostream& out) {
  char buf[64];
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      std::snprintf(buf, sizeof(buf), "%.17g", map.at(x, y));
      out << buf << (x + 1 == map.width ? '\n' : ',');
    }
  }
}

}  // namespace pwmf
