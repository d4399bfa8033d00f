#pragma once

#include <optional>

#include "pwmf/gray_image.hpp"

namespace pwmf {

/// How the center pixel enters its own weighted mean.
enum class SelfWeight { computed, max_of_others };

struct NlmParams {
  int d = 7;                      // patch diameter (odd)
  int D = 21;                     // search window diameter (odd)
  double sigma_r = 10.0;          // weight control parameter
  PatchKernel kernel = PatchKernel::uniform(7);
  bool exclude_center_norm = false;  // use the center-free patch norm
  SelfWeight self_weight = SelfWeight::max_of_others;
  /// When set, only neighbors whose unnormalized Euclidean patch norm
  /// over the full d x d window is <= threshold participate; if none
  /// qualifies, the full window is used instead.
  std::optional<double> similarity_threshold;

  void validate() const;  // throws std::invalid_argument
};

/// NL-means: each pixel becomes the patch-similarity weighted mean of
/// its search window, w(i,j) = exp(-||patch_i - patch_j||_a^2 / (2 sigma_r^2)).
GrayImage nlm_denoise(const GrayImage& img, const NlmParams& params);

}  // namespace pwmf
