#include "pwmf/trif.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwmf/parallel.hpp"

namespace pwmf {

void TrifParams::validate() const {
  if (D < 1 || D % 2 == 0) throw std::invalid_argument("search diameter must be odd");
  if (!(sigma_i > 0.0)) throw std::invalid_argument("sigma_i must be positive");
  if (!(sigma_j > 0.0)) throw std::invalid_argument("sigma_j must be positive");
  if (!(sigma_s > 0.0)) throw std::invalid_argument("sigma_s must be positive");
  if (!(sigma_r > 0.0)) throw std::invalid_argument("sigma_r must be positive");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  for (double s : sigma_s_schedule)
    if (!(s > 0.0)) throw std::invalid_argument("sigma_s schedule entries must be positive");
  road_cfg.validate();
}

namespace detail {

double weighted_median(std::vector<std::pair<double, double>>& value_weight) {
  std::sort(value_weight.begin(), value_weight.end());
  double total = 0.0;
  for (const auto& [v, w] : value_weight) total += w;
  if (!(total > 0.0)) return value_weight[value_weight.size() / 2].first;
  double acc = 0.0;
  for (const auto& [v, w] : value_weight) {
    acc += w;
    if (acc >= 0.5 * total) return v;
  }
  return value_weight.back().first;
}

}  // namespace detail

GrayImage trif_denoise(const GrayImage& img, const TrifParams& params) {
  params.validate();
  const RoadMap rm = road(img, params.road_cfg);

  const int hD = (params.D - 1) / 2;
  const GrayImage v = detail::reflect_pad(img, hD);
  // ROAD values travel with their pixels across the mirror border.
  GrayImage road_plane(img.width, img.height);
  road_plane.pixels = rm.values;
  const GrayImage rpad = detail::reflect_pad(road_plane, hD);

  // Spatial factor over window offsets, Chebyshev distance.
  const int D = params.D;
  std::vector<double> ws(static_cast<std::size_t>(D) * D);
  for (int dy = -hD; dy <= hD; ++dy)
    for (int dx = -hD; dx <= hD; ++dx) {
      const int cheb = std::max(std::abs(dx), std::abs(dy));
      ws[static_cast<std::size_t>(dy + hD) * D + (dx + hD)] =
          std::exp(-static_cast<double>(cheb) * cheb / (2.0 * params.sigma_s * params.sigma_s));
    }

  const double inv2_si2 = 1.0 / (2.0 * params.sigma_i * params.sigma_i);
  const double inv2_sj2 = 1.0 / (2.0 * params.sigma_j * params.sigma_j);
  const double inv2_sr2 = 1.0 / (2.0 * params.sigma_r * params.sigma_r);

  GrayImage out(img.width, img.height);
  const int vw = v.width;

  parallel_for(0, img.height, [&](std::int64_t row) {
    const int y = static_cast<int>(row);
    std::vector<std::pair<double, double>> window;
    for (int x = 0; x < img.width; ++x) {
      const std::ptrdiff_t ci = static_cast<std::ptrdiff_t>(v.index(x + hD, y + hD));
      const double vi = v.pixels[ci];
      const double road_i = rpad.pixels[ci];
      double num = 0.0;
      double den = 0.0;
      for (int jy = -hD; jy <= hD; ++jy) {
        for (int jx = -hD; jx <= hD; ++jx) {
          const std::ptrdiff_t cj = ci + static_cast<std::ptrdiff_t>(jy) * vw + jx;
          const double vj = v.pixels[cj];
          const double road_j = rpad.pixels[cj];
          const double mean_road = 0.5 * (road_i + road_j);
          const double ji = std::exp(-mean_road * mean_road * inv2_sj2);
          const double dv = vi - vj;
          // w_R^ji * w_I(j)^(1-ji), combined in the exponent.
          const double w = ws[static_cast<std::size_t>(jy + hD) * D + (jx + hD)] *
                           std::exp(-(ji * dv * dv * inv2_sr2 +
                                      (1.0 - ji) * road_j * road_j * inv2_si2));
          num += w * vj;
          den += w;
        }
      }
      if (den < 1e-12) {
        window.clear();
        for (int jy = -hD; jy <= hD; ++jy)
          for (int jx = -hD; jx <= hD; ++jx) {
            const std::ptrdiff_t cj = ci + static_cast<std::ptrdiff_t>(jy) * vw + jx;
            const double road_j = rpad.pixels[cj];
            window.emplace_back(v.pixels[cj], std::exp(-road_j * road_j * inv2_si2));
          }
        out.at(x, y) = detail::weighted_median(window);
      } else {
        out.at(x, y) = num / den;
      }
    }
  });
  return out;
}

GrayImage trif_iterate(const GrayImage& img, const TrifParams& params) {
  params.validate();
  const int passes = params.sigma_s_schedule.empty()
                         ? params.iterations
                         : static_cast<int>(params.sigma_s_schedule.size());
  GrayImage current = img;
  TrifParams pass_params = params;
  for (int k = 0; k < passes; ++k) {
    if (!params.sigma_s_schedule.empty()) pass_params.sigma_s = params.sigma_s_schedule[k];
    current = trif_denoise(current, pass_params);
  }
  return current;
}

TrifParams trif_auto_params(double sigma, double p, NoiseKind kind) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("p must be in [0,1)");
  TrifParams params;  // sigma_i=40, sigma_j=50, sigma_s=0.5
  switch (kind) {
    case NoiseKind::impulse:
      if (sigma != 0.0) throw std::invalid_argument("impulse noise expects sigma = 0");
      params.sigma_r = 25.0;
      params.iterations = p <= 0.2 ? 1 : (p <= 0.4 ? 2 : 4);
      break;
    case NoiseKind::mixed:
    case NoiseKind::gaussian:
      if (kind == NoiseKind::gaussian && p != 0.0)
        throw std::invalid_argument("gaussian noise expects p = 0");
      params.sigma_r = std::max(20.0, 3.0 * sigma);
      // Two passes; the second widens the spatial support as sigma grows.
      if (sigma < 15.0)
        params.sigma_s_schedule = {0.3, 1.0};
      else if (sigma < 25.0)
        params.sigma_s_schedule = {0.3, 15.0};
      else
        params.sigma_s_schedule = {15.0, 15.0};
      break;
  }
  return params;
}

}  // namespace pwmf
