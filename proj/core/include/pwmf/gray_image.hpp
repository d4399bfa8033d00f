#pragma once

#include <cstddef>
#include <vector>

namespace pwmf {

/// Pixel coordinate; x is the column index, y the row index.
struct PixelCoord {
  int x = 0;
  int y = 0;
};

/// Real-valued grayscale image, row-major storage. Values are nominally
/// in [0,255] but are never clamped except when writing 8-bit files.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0);

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
  }
  double at(int x, int y) const { return pixels[index(x, y)]; }
  double& at(int x, int y) { return pixels[index(x, y)]; }
  std::size_t pixel_count() const { return pixels.size(); }
  bool same_shape(const GrayImage& other) const {
    return width == other.width && height == other.height;
  }
};

/// Reflects an index into [0, n) without repeating the edge sample
/// (period 2n-2). A length-1 axis maps every index to 0.
int mirror_index(int p, int n);

/// Mirror padding by r pixels on every side. The interior equals the
/// input and the border repeats nothing. Throws std::invalid_argument
/// ("pad radius too large") when r >= min(width, height) and both
/// dimensions are at least 2; along a length-1 axis the reflection is
/// the constant extension, so any radius is accepted there.
GrayImage mirror_pad(const GrayImage& img, int r);

/// Fixed nonnegative per-offset weights over a d x d patch window.
struct PatchKernel {
  int d = 3;
  std::vector<double> weights;  // d*d entries, row-major over offsets
  bool exclude_center = false;  // treat the center offset weight as 0

  static PatchKernel uniform(int d, bool exclude_center = false);
  /// Weights exp(-(dx^2+dy^2)/(2 sigma^2)), decreasing in the Euclidean
  /// offset norm.
  static PatchKernel gaussian(int d, double sigma, bool exclude_center = false);

  /// Weight for offset (dx, dy), honoring exclude_center.
  double weight(int dx, int dy) const;
  /// Sum of effective weights (center masked out when excluded).
  double weight_sum() const;
  /// Throws std::invalid_argument when d is not an odd integer >= 3,
  /// any weight is negative, or no effective weight is positive.
  void validate() const;
};

/// The d x d patch around i in lexicographic (row-major) order; border
/// coordinates are resolved by mirror reflection. Throws when d is even
/// or not positive.
std::vector<double> patch(const GrayImage& img, PixelCoord i, int d);

/// Normalized weighted squared patch distance
///   sum_k a(k) |v(i+k) - v(j+k)|^2 / sum_k a(k)
/// over offsets k of the kernel window, mirror-reflected at borders.
double patch_distance2(const GrayImage& img, PixelCoord i, PixelCoord j,
                       const PatchKernel& kernel);

namespace detail {
/// Mirror padding with no domain check; coincides with mirror_pad
/// wherever the latter is defined.
GrayImage reflect_pad(const GrayImage& img, int r);
}  // namespace detail

}  // namespace pwmf
