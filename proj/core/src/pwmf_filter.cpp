#include "pwmf/pwmf_filter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pwmf/parallel.hpp"
#include "pwmf/trif.hpp"

namespace pwmf {

void PwmfParams::validate() const {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("patch diameter must be odd and >= 3");
  if (D < 1 || D % 2 == 0) throw std::invalid_argument("search diameter must be odd");
  if (!(sigma_i > 0.0)) throw std::invalid_argument("sigma_i must be positive");
  if (!(sigma_m > 0.0)) throw std::invalid_argument("sigma_m must be positive");
  if (!(sigma_s > 0.0)) throw std::invalid_argument("sigma_s must be positive or infinite");
  if (!(sigma_sm > 0.0)) throw std::invalid_argument("sigma_sm must be positive or infinite");
  road_cfg.validate();
}

namespace {

// Chebyshev-distance spatial factor per window offset; identically 1
// when the scale is infinite.
std::vector<double> spatial_lut(int diameter, double sigma) {
  const int h = (diameter - 1) / 2;
  std::vector<double> lut(static_cast<std::size_t>(diameter) * diameter, 1.0);
  if (!std::isfinite(sigma)) return lut;
  for (int dy = -h; dy <= h; ++dy)
    for (int dx = -h; dx <= h; ++dx) {
      const int cheb = std::max(std::abs(dx), std::abs(dy));
      lut[static_cast<std::size_t>(dy + h) * diameter + (dx + h)] =
          std::exp(-static_cast<double>(cheb) * cheb / (2.0 * sigma * sigma));
    }
  return lut;
}

}  // namespace

double pwmf_norm2(const GrayImage& img, const RoadMap& roadmap, PixelCoord i,
                  PixelCoord j, const PwmfParams& params) {
  params.validate();
  if (img.width != roadmap.width || img.height != roadmap.height)
    throw std::invalid_argument("roadmap dimensions must match image");
  const int h = (params.d - 1) / 2;
  const std::vector<double> wsm = spatial_lut(params.d, params.sigma_sm);
  const double inv2_si2 = 1.0 / (2.0 * params.sigma_i * params.sigma_i);

  double num = 0.0;
  double den = 0.0;
  for (int dy = -h; dy <= h; ++dy) {
    const int ky_i = mirror_index(i.y + dy, img.height);
    const int ky_j = mirror_index(j.y + dy, img.height);
    for (int dx = -h; dx <= h; ++dx) {
      if (dx == 0 && dy == 0) continue;  // center-free norm
      const int kx_i = mirror_index(i.x + dx, img.width);
      const int kx_j = mirror_index(j.x + dx, img.width);
      const double road_k = roadmap.at(kx_i, ky_i);
      const double road_t = roadmap.at(kx_j, ky_j);
      const double mask = wsm[static_cast<std::size_t>(dy + h) * params.d + (dx + h)] *
                          std::exp(-road_k * road_k * inv2_si2) *
                          std::exp(-road_t * road_t * inv2_si2);
      const double diff = img.at(kx_i, ky_i) - img.at(kx_j, ky_j);
      num += mask * diff * diff;
      den += mask;
    }
  }
  if (den < 1e-12) return std::numeric_limits<double>::infinity();
  return num / den;
}

GrayImage pwmf_denoise(const GrayImage& img, const PwmfParams& params) {
  params.validate();
  const RoadMap rm = road(img, params.road_cfg);

  const int hd = (params.d - 1) / 2;
  const int hD = (params.D - 1) / 2;
  const int pad = hD + hd;
  const GrayImage v = detail::reflect_pad(img, pad);

  // Per-pixel impulse factor, padded alongside the image so masked
  // values follow their pixels across the mirror border.
  GrayImage wi_plane(img.width, img.height);
  const double inv2_si2 = 1.0 / (2.0 * params.sigma_i * params.sigma_i);
  for (std::size_t k = 0; k < rm.values.size(); ++k)
    wi_plane.pixels[k] = std::exp(-rm.values[k] * rm.values[k] * inv2_si2);
  const GrayImage wi = detail::reflect_pad(wi_plane, pad);

  const int d = params.d;
  const int D = params.D;
  const std::vector<double> wsm = spatial_lut(d, params.sigma_sm);
  const std::vector<double> ws = spatial_lut(D, params.sigma_s);
  const double inv2_sm2 = 1.0 / (2.0 * params.sigma_m * params.sigma_m);

  GrayImage out(img.width, img.height);
  const int vw = v.width;
  const double* vp = v.pixels.data();
  const double* wp = wi.pixels.data();

  // Patch offsets relative to the padded center, center excluded.
  std::vector<std::ptrdiff_t> patch_off;
  std::vector<double> patch_wsm;
  patch_off.reserve(static_cast<std::size_t>(d) * d - 1);
  for (int dy = -hd; dy <= hd; ++dy)
    for (int dx = -hd; dx <= hd; ++dx) {
      if (dx == 0 && dy == 0) continue;
      patch_off.push_back(static_cast<std::ptrdiff_t>(dy) * vw + dx);
      patch_wsm.push_back(wsm[static_cast<std::size_t>(dy + hd) * d + (dx + hd)]);
    }
  const std::size_t n_off = patch_off.size();

  parallel_for(0, img.height, [&](std::int64_t row) {
    const int y = static_cast<int>(row);
    std::vector<double> mask_i(n_off);
    std::vector<std::pair<double, double>> window;
    for (int x = 0; x < img.width; ++x) {
      const std::ptrdiff_t ci = static_cast<std::ptrdiff_t>(v.index(x + pad, y + pad));

      for (std::size_t k = 0; k < n_off; ++k)
        mask_i[k] = patch_wsm[k] * wp[ci + patch_off[k]];

      double num = 0.0;
      double den = 0.0;
      for (int jy = -hD; jy <= hD; ++jy) {
        for (int jx = -hD; jx <= hD; ++jx) {
          const std::ptrdiff_t cj = ci + static_cast<std::ptrdiff_t>(jy) * vw + jx;
          double norm_num = 0.0;
          double norm_den = 0.0;
          for (std::size_t k = 0; k < n_off; ++k) {
            const std::ptrdiff_t off = patch_off[k];
            const double t = mask_i[k] * wp[cj + off];
            const double diff = vp[ci + off] - vp[cj + off];
            norm_num += t * diff * diff;
            norm_den += t;
          }
          // Degenerate mask => infinite norm => zero similarity weight.
          const double wm = norm_den < 1e-12 ? 0.0 : std::exp(-(norm_num / norm_den) * inv2_sm2);
          const double w = ws[static_cast<std::size_t>(jy + hD) * D + (jx + hD)] * wp[cj] * wm;
          num += w * vp[cj];
          den += w;
        }
      }

      if (den < 1e-12) {
        window.clear();
        for (int jy = -hD; jy <= hD; ++jy)
          for (int jx = -hD; jx <= hD; ++jx) {
            const std::ptrdiff_t cj = ci + static_cast<std::ptrdiff_t>(jy) * vw + jx;
            window.emplace_back(vp[cj], wp[cj]);
          }
        out.at(x, y) = detail::weighted_median(window);
      } else {
        out.at(x, y) = num / den;
      }
    }
  });
  return out;
}

int pwmf_search_diameter(double sigma) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  static const double grid_sigma[] = {0.0, 10.0, 20.0, 30.0};
  static const double grid_d[] = {7.0, 7.0, 11.0, 15.0};
  double value;
  if (sigma >= 30.0) {
    value = 15.0;
  } else {
    std::size_t hi = 1;
    while (sigma > grid_sigma[hi]) ++hi;
    const double t = (sigma - grid_sigma[hi - 1]) / (grid_sigma[hi] - grid_sigma[hi - 1]);
    value = grid_d[hi - 1] + t * (grid_d[hi] - grid_d[hi - 1]);
  }
  // Nearest odd integer, ties upward (lround ties away from zero).
  long odd = 2 * std::lround((value - 1.0) / 2.0) + 1;
  if (odd < 1) odd = 1;
  return static_cast<int>(odd);
}

PwmfParams auto_params(double sigma, double p, NoiseKind kind) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("p must be in [0,1)");
  PwmfParams q;
  q.d = 9;
  q.D = pwmf_search_diameter(sigma);
  q.road_cfg = p < 0.35 ? RoadConfig{1, 4} : RoadConfig{2, 12};

  const double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case NoiseKind::impulse: {
      if (sigma != 0.0) throw std::invalid_argument("impulse noise expects sigma = 0");
      q.sigma_m = 3.0 + 20.0 * p;
      q.sigma_s = 0.6 + p;
      q.sigma_sm = inf;
      if (p <= 0.3)
        q.sigma_i = 50.0;
      else if (p >= 0.4)
        q.sigma_i = 160.0;
      else
        q.sigma_i = 50.0 + (160.0 - 50.0) * (p - 0.3) / 0.1;
      break;
    }
    case NoiseKind::mixed:
      q.sigma_i = 50.0 + 5.0 * sigma / 3.0;
      q.sigma_m = 3.0 + 0.4 * sigma + 20.0 * p;
      q.sigma_sm = 2.0;
      q.sigma_s = inf;
      break;
    case NoiseKind::gaussian:
      if (p != 0.0) throw std::invalid_argument("gaussian noise expects p = 0");
      q.sigma_i = 1e12;  // effectively disables the impulse factor
      q.sigma_m = 3.0 + 0.4 * sigma;
      q.sigma_sm = 2.0;
      q.sigma_s = inf;
      break;
  }
  return q;
}

}  // namespace pwmf
