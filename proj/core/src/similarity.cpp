#include "pwmf/similarity.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pwmf/parallel.hpp"

namespace pwmf {

namespace detail {

namespace {

// Series expansion of P(a, x), for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) = 1 - P(a, x), for x >= a + 1
// (modified Lentz).
double gamma_q_continued_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int n = 1; n < 500; ++n) {
    const double an = -n * (n - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("regularized_gamma_p domain error");
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_continued_fraction(a, x);
}

double chi2_quantile(double prob, double dof) {
  if (!(prob > 0.0 && prob < 1.0)) throw std::invalid_argument("probability must be in (0,1)");
  if (!(dof > 0.0)) throw std::invalid_argument("degrees of freedom must be positive");
  const double a = 0.5 * dof;
  auto cdf = [a](double x) { return regularized_gamma_p(a, 0.5 * x); };

  double lo = 0.0;
  double hi = dof + 16.0 * std::sqrt(2.0 * dof) + 16.0;
  while (cdf(hi) < prob) hi *= 2.0;
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < prob ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

double t_alpha(double alpha, double sigma, int d) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (d < 1 || d % 2 == 0) throw std::invalid_argument("patch diameter must be odd");
  const double dof = static_cast<double>(d) * d;
  const double q = detail::chi2_quantile(1.0 - alpha, dof);
  return std::sqrt(2.0 * sigma * sigma * q);
}

DsReport ds_map(const GrayImage& img, double sigma, double alpha, int d, int D) {
  if (D < 1 || D % 2 == 0) throw std::invalid_argument("search diameter must be odd");
  DsReport report;
  report.alpha = alpha;
  report.sigma = sigma;
  report.d = d;
  report.D = D;
  report.t_alpha = t_alpha(alpha, sigma, d);

  const int hd = (d - 1) / 2;
  const int hD = (D - 1) / 2;
  const int pad = hD + hd;
  const GrayImage v = detail::reflect_pad(img, pad);
  const int vw = v.width;
  const double* vp = v.pixels.data();
  const double thr2 = report.t_alpha * report.t_alpha;
  const double window_size = static_cast<double>(D) * D;

  report.per_pixel = GrayImage(img.width, img.height);
  parallel_for(0, img.height, [&](std::int64_t row) {
    const int y = static_cast<int>(row);
    for (int x = 0; x < img.width; ++x) {
      const std::ptrdiff_t ci = static_cast<std::ptrdiff_t>(v.index(x + pad, y + pad));
      int count = 0;
      for (int jy = -hD; jy <= hD; ++jy) {
        for (int jx = -hD; jx <= hD; ++jx) {
          const std::ptrdiff_t cj = ci + static_cast<std::ptrdiff_t>(jy) * vw + jx;
          double dist2 = 0.0;
          const double* pi = vp + ci - static_cast<std::ptrdiff_t>(hd) * vw - hd;
          const double* pj = vp + cj - static_cast<std::ptrdiff_t>(hd) * vw - hd;
          for (int ky = 0; ky < d; ++ky) {
            for (int kx = 0; kx < d; ++kx) {
              const double diff = pi[kx] - pj[kx];
              dist2 += diff * diff;
            }
            if (dist2 > thr2) break;  // already past the threshold
            pi += vw;
            pj += vw;
          }
          if (dist2 <= thr2) ++count;
        }
      }
      report.per_pixel.at(x, y) = count / window_size;
    }
  });

  double total = 0.0;
  for (double value : report.per_pixel.pixels) total += value;
  report.global = total / static_cast<double>(report.per_pixel.pixel_count());
  return report;
}

}  // namespace pwmf
