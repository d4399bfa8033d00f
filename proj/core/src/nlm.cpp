#include "pwmf/nlm.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pwmf/parallel.hpp"

namespace pwmf {

void NlmParams::validate() const {
  if (d < 1 || d % 2 == 0) throw std::invalid_argument("patch diameter must be odd");
  if (D < 1 || D % 2 == 0) throw std::invalid_argument("search diameter must be odd");
  if (!(sigma_r > 0.0)) throw std::invalid_argument("sigma_r must be positive");
  if (kernel.d != d) throw std::invalid_argument("kernel diameter must match patch diameter");
  kernel.validate();
  if (similarity_threshold && !(*similarity_threshold >= 0.0))
    throw std::invalid_argument("similarity threshold must be nonnegative");
}

GrayImage nlm_denoise(const GrayImage& img, const NlmParams& params) {
  params.validate();
  const int hd = (params.d - 1) / 2;
  const int hD = (params.D - 1) / 2;
  const int pad = hD + hd;
  const GrayImage v = detail::reflect_pad(img, pad);

  // Effective kernel weights in offset order, honoring center exclusion.
  const int d = params.d;
  std::vector<double> a(static_cast<std::size_t>(d) * d);
  double a_sum = 0.0;
  for (int dy = -hd; dy <= hd; ++dy)
    for (int dx = -hd; dx <= hd; ++dx) {
      const double w = params.kernel.weight(dx, dy);
      a[static_cast<std::size_t>(dy + hd) * d + (dx + hd)] = w;
      a_sum += w;
    }

  const double inv_two_sigma2 = 1.0 / (2.0 * params.sigma_r * params.sigma_r);
  const double thr2 = params.similarity_threshold
                          ? *params.similarity_threshold * *params.similarity_threshold
                          : 0.0;

  GrayImage out(img.width, img.height);
  const int vw = v.width;
  const double* vp = v.pixels.data();

  parallel_for(0, img.height, [&](std::int64_t row) {
    const int y = static_cast<int>(row);
    for (int x = 0; x < img.width; ++x) {
      const std::ptrdiff_t ci = static_cast<std::ptrdiff_t>(v.index(x + pad, y + pad));

      // One accumulation pass; when thresholding finds no similar
      // neighbor the window is re-run unrestricted.
      for (int attempt = 0; attempt < 2; ++attempt) {
        const bool use_threshold = params.similarity_threshold.has_value() && attempt == 0;
        double num = 0.0;
        double den = 0.0;
        double w_max = 0.0;
        bool any_neighbor = false;

        for (int jy = -hD; jy <= hD; ++jy) {
          for (int jx = -hD; jx <= hD; ++jx) {
            if (jx == 0 && jy == 0) continue;
            const std::ptrdiff_t cj = ci + static_cast<std::ptrdiff_t>(jy) * vw + jx;
            double weighted = 0.0;  // sum a_k diff^2
            double plain = 0.0;     // unnormalized full-window sum diff^2
            const double* pi = vp + ci - static_cast<std::ptrdiff_t>(hd) * vw - hd;
            const double* pj = vp + cj - static_cast<std::ptrdiff_t>(hd) * vw - hd;
            const double* ak = a.data();
            for (int ky = 0; ky < d; ++ky) {
              for (int kx = 0; kx < d; ++kx) {
                const double diff = pi[kx] - pj[kx];
                const double d2 = diff * diff;
                plain += d2;
                weighted += ak[kx] * d2;
              }
              pi += vw;
              pj += vw;
              ak += d;
            }
            if (use_threshold && plain > thr2) continue;
            any_neighbor = true;
            const double w = std::exp(-(weighted / a_sum) * inv_two_sigma2);
            if (w > w_max) w_max = w;
            num += w * vp[cj];
            den += w;
          }
        }

        if (use_threshold && !any_neighbor) continue;  // fall back to full window

        const double self_w = params.self_weight == SelfWeight::computed
                                  ? 1.0
                                  : (any_neighbor ? w_max : 1.0);
        num += self_w * vp[ci];
        den += self_w;
        out.at(x, y) = den > 0.0 ? num / den : vp[ci];
        break;
      }
    }
  });
  return out;
}

}  // namespace pwmf
