#pragma once

#include <limits>

#include "pwmf/noise.hpp"
#include "pwmf/road.hpp"

namespace pwmf {

/// Patch-based weighted means filter parameters. sigma_s and sigma_sm
/// may be infinity, which omits the corresponding spatial factor
/// (i.e. the factor is identically 1).
struct PwmfParams {
  int d = 9;  // patch diameter (odd)
  int D = 7;  // search window diameter (odd)
  double sigma_i = 50.0;
  double sigma_m = 7.0;
  double sigma_s = std::numeric_limits<double>::infinity();
  double sigma_sm = std::numeric_limits<double>::infinity();
  RoadConfig road_cfg;

  bool spatial_means_enabled() const { return std::isfinite(sigma_s); }
  bool spatial_norm_enabled() const { return std::isfinite(sigma_sm); }
  void validate() const;  // throws std::invalid_argument
};

/// Impulse-masked weighted squared patch norm between the patches at i
/// and j: per-offset terms are weighted by w_SM(i,k) * w_I(k) * w_I(T(k))
/// and normalized by the same mask, the center offset excluded. Returns
/// +infinity when the mask sum is below 1e-12 (every contributing pixel
/// impulse-like), which zeroes the similarity weight for that pair.
double pwmf_norm2(const GrayImage& img, const RoadMap& roadmap, PixelCoord i,
                  PixelCoord j, const PwmfParams& params);

/// Weighted means with w(i,j) = w_S(i,j) * w_I(j) * w_M(i,j), where
/// w_M = exp(-norm2/(2 sigma_m^2)). ROAD is computed once on the input;
/// a degenerate weight sum falls back to the w_I-weighted window median.
GrayImage pwmf_denoise(const GrayImage& img, const PwmfParams& params);

/// Search window diameter as a function of the Gaussian sigma: anchored
/// at sigma {0,10,20,30} -> {7,7,11,15}, linear in between (clamped
/// above 30) and rounded to the nearest odd integer, ties upward.
int pwmf_search_diameter(double sigma);

/// Parameter schedule keyed by the noise model:
///  - impulse: sigma_m = 3+20p, sigma_s = 0.6+p, norm factor omitted,
///    sigma_i = 50 below p=0.3 ramping to 160 at p=0.4;
///  - mixed:   sigma_i = 50+5s/3, sigma_m = 3+0.4s+20p, sigma_sm = 2,
///    means spatial factor omitted;
///  - gaussian: impulse and means spatial factors disabled so the filter
///    degenerates to NL-means with sigma_m = 3+0.4s.
/// ROAD uses a 3x3 window with m=4 below p=0.35 and 5x5 with m=12 above.
/// d is always 9; D follows pwmf_search_diameter.
PwmfParams auto_params(double sigma, double p, NoiseKind kind);

}  // namespace pwmf
