#pragma once

#include <vector>

#include "pwmf/noise.hpp"
#include "pwmf/road.hpp"

namespace pwmf {

struct TrifParams {
  int D = 7;              // search window diameter (odd)
  double sigma_i = 40.0;  // impulse factor scale
  double sigma_j = 50.0;  // joint impulse factor scale
  double sigma_s = 0.5;   // spatial scale
  double sigma_r = 60.0;  // radiometric scale
  RoadConfig road_cfg;
  int iterations = 1;
  /// When non-empty, one pass per entry with that pass's sigma_s
  /// (overrides iterations).
  std::vector<double> sigma_s_schedule;

  void validate() const;  // throws std::invalid_argument
};

/// One trilateral pass:
///   w(i,j) = w_S(i,j) * w_R(i,j)^J(i,j) * w_I(j)^(1-J(i,j))
/// with Chebyshev spatial distance, ROAD computed from the input. A
/// degenerate weight sum falls back to the w_I-weighted window median.
GrayImage trif_denoise(const GrayImage& img, const TrifParams& params);

/// Repeated passes, each fed the previous output; ROAD is recomputed
/// every pass.
GrayImage trif_iterate(const GrayImage& img, const TrifParams& params);

/// Iteration counts and sigma_s schedules used for the benchmark
/// protocol: impulse noise runs 1/2/2/4 passes for p = 0.2/0.3/0.4/0.5,
/// mixed noise runs two passes with sigma_s picked by sigma.
TrifParams trif_auto_params(double sigma, double p, NoiseKind kind);

namespace detail {
/// Median of values under nonnegative weights (smallest value whose
/// cumulative weight reaches half the total); an all-zero weight vector
/// degrades to the plain median.
double weighted_median(std::vector<std::pair<double, double>>& value_weight);
}  // namespace detail

}  // namespace pwmf
