#pragma once

#include "pwmf/gray_image.hpp"

namespace pwmf {

/// Degree-of-similarity report: the per-pixel fraction of search-window
/// patches within the chi-square distance threshold, and its image mean.
struct DsReport {
  double alpha = 0.1;
  double sigma = 0.0;
  int d = 9;
  int D = 7;
  double t_alpha = 0.0;
  GrayImage per_pixel;  // DS_i in [1/D^2, 1]
  double global = 0.0;
};

/// Similarity threshold T with P(||patch_i - patch_j|| <= T) = 1 - alpha
/// for independent same-law patches under Gaussian noise:
/// T = sqrt(2 sigma^2 Q), Q the upper-alpha quantile of chi-square with
/// d^2 degrees of freedom.
double t_alpha(double alpha, double sigma, int d);

/// DS_i = #{j in the D-window : ||patch_i - patch_j|| <= T_alpha} / D^2,
/// with the unnormalized Euclidean norm over the full d x d window; the
/// global value is the mean over all pixels.
DsReport ds_map(const GrayImage& img, double sigma, double alpha, int d, int D);

namespace detail {
/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);
/// Chi-square quantile: the x with CDF(x; dof) = prob, found by
/// bisection to absolute tolerance 1e-8.
double chi2_quantile(double prob, double dof);
}  // namespace detail

}  // namespace pwmf
