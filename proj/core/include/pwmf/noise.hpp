#pragma once

#include <cstdint>
#include <string>

#include "pwmf/gray_image.hpp"

namespace pwmf {

enum class NoiseKind { gaussian, impulse, mixed };

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& s);  // throws std::invalid_argument

/// Full description of a synthetic degradation; serializable as plain
/// key=value text for bench manifests.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::gaussian;
  double sigma = 0.0;   // Gaussian standard deviation, gray levels
  double p = 0.0;       // impulse probability in [0,1)
  double lo = 0.0;      // impulse value range
  double hi = 255.0;
  std::uint64_t seed = 0;

  void validate() const;
  std::string to_key_value() const;
  static NoiseSpec from_key_value(const std::string& text);
};

/// v(i) = u(i) + eta(i), eta i.i.d. N(0, sigma^2). Each pixel draws from
/// its own counter-based stream keyed by (seed, pixel index); the output
/// is not clamped.
GrayImage add_gaussian(const GrayImage& img, double sigma, std::uint64_t seed);

/// Each pixel is independently replaced by Uniform[lo, hi) with
/// probability p, else left bit-identical.
GrayImage add_impulse(const GrayImage& img, double p, double lo, double hi, std::uint64_t seed);

/// Gaussian noise first, then impulse noise on [0,255], with sub-seeds
/// derived deterministically from seed.
GrayImage add_mixed(const GrayImage& img, double sigma, double p, std::uint64_t seed);

GrayImage apply_noise(const GrayImage& img, const NoiseSpec& spec);

}  // namespace pwmf
