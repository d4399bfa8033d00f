#include "pwmf/gray_image.hpp"

#include <cmath>
#include <stdexcept>

namespace pwmf {

GrayImage::GrayImage(int w, int h, double fill)
    : width(w),
      height(h),
      pixels(static_cast<std::size_t>(w < 0 ? 0 : w) * static_cast<std::size_t>(h < 0 ? 0 : h), fill) {
  if (w <= 0 || h <= 0) throw std::invalid_argument("image dimensions must be positive");
}

int mirror_index(int p, int n) {
  if (n == 1) return 0;
  const int period = 2 * n - 2;
  p %= period;
  if (p < 0) p += period;
  return p < n ? p : period - p;
}

GrayImage mirror_pad(const GrayImage& img, int r) {
  if (r < 0) throw std::invalid_argument("pad radius must be nonnegative");
  const int short_side = img.width < img.height ? img.width : img.height;
  if (short_side >= 2 && r >= short_side) throw std::invalid_argument("pad radius too large");
  return detail::reflect_pad(img, r);
}

namespace detail {

GrayImage reflect_pad(const GrayImage& img, int r) {
  GrayImage out(img.width + 2 * r, img.height + 2 * r);
  for (int y = 0; y < out.height; ++y) {
    const int sy = mirror_index(y - r, img.height);
    for (int x = 0; x < out.width; ++x) {
      out.at(x, y) = img.at(mirror_index(x - r, img.width), sy);
    }
  }
  return out;
}

}  // namespace detail

PatchKernel PatchKernel::uniform(int d, bool exclude_center) {
  PatchKernel k;
  k.d = d;
  k.weights.assign(static_cast<std::size_t>(d) * d, 1.0);
  k.exclude_center = exclude_center;
  return k;
}

PatchKernel PatchKernel::gaussian(int d, double sigma, bool exclude_center) {
  if (sigma <= 0.0) throw std::invalid_argument("kernel sigma must be positive");
  PatchKernel k;
  k.d = d;
  k.exclude_center = exclude_center;
  k.weights.resize(static_cast<std::size_t>(d) * d);
  const int h = (d - 1) / 2;
  for (int dy = -h; dy <= h; ++dy)
    for (int dx = -h; dx <= h; ++dx)
      k.weights[static_cast<std::size_t>(dy + h) * d + (dx + h)] =
          std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
  return k;
}

double PatchKernel::weight(int dx, int dy) const {
  if (exclude_center && dx == 0 && dy == 0) return 0.0;
  const int h = (d - 1) / 2;
  return weights[static_cast<std::size_t>(dy + h) * d + (dx + h)];
}

double PatchKernel::weight_sum() const {
  double s = 0.0;
  const int h = (d - 1) / 2;
  for (int dy = -h; dy <= h; ++dy)
    for (int dx = -h; dx <= h; ++dx) s += weight(dx, dy);
  return s;
}

void PatchKernel::validate() const {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("kernel diameter must be odd and >= 3");
  if (weights.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("kernel weight count must be d*d");
  for (double w : weights)
    if (!(w >= 0.0)) throw std::invalid_argument("kernel weights must be nonnegative");
  if (!(weight_sum() > 0.0)) throw std::invalid_argument("kernel needs at least one positive weight");
}

std::vector<double> patch(const GrayImage& img, PixelCoord i, int d) {
  if (d <= 0 || d % 2 == 0) throw std::invalid_argument("patch diameter must be odd and positive");
  const int h = (d - 1) / 2;
  std::vector<double> out(static_cast<std::size_t>(d) * d);
  std::size_t n = 0;
  for (int dy = -h; dy <= h; ++dy) {
    const int sy = mirror_index(i.y + dy, img.height);
    for (int dx = -h; dx <= h; ++dx) out[n++] = img.at(mirror_index(i.x + dx, img.width), sy);
  }
  return out;
}

double patch_distance2(const GrayImage& img, PixelCoord i, PixelCoord j,
                       const PatchKernel& kernel) {
  kernel.validate();
  const int h = (kernel.d - 1) / 2;
  double num = 0.0;
  double den = 0.0;
  for (int dy = -h; dy <= h; ++dy) {
    const int iy = mirror_index(i.y + dy, img.height);
    const int jy = mirror_index(j.y + dy, img.height);
    for (int dx = -h; dx <= h; ++dx) {
      const double a = kernel.weight(dx, dy);
      if (a == 0.0) continue;
      const double diff = img.at(mirror_index(i.x + dx, img.width), iy) -
                          img.at(mirror_index(j.x + dx, img.width), jy);
      num += a * diff * diff;
      den += a;
    }
  }
  return num / den;
}

}  // namespace pwmf
