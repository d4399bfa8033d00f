#include "pwmf/noise.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pwmf/parallel.hpp"
#include "pwmf/rng.hpp"

namespace pwmf {

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::gaussian: return "gaussian";
    case NoiseKind::impulse: return "impulse";
    case NoiseKind::mixed: return "mixed";
  }
  return "?";
}

NoiseKind noise_kind_from_string(const std::string& s) {
  if (s == "gaussian") return NoiseKind::gaussian;
  if (s == "impulse") return NoiseKind::impulse;
  if (s == "mixed") return NoiseKind::mixed;
  throw std::invalid_argument("unknown noise kind: " + s);
}

void NoiseSpec::validate() const {
  if (!(sigma >= 0.0)) throw std::invalid_argument("noise sigma must be >= 0");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("impulse probability must be in [0,1)");
  if (!(lo < hi)) throw std::invalid_argument("impulse range requires lo < hi");
}

std::string NoiseSpec::to_key_value() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "kind=%s sigma=%.17g p=%.17g lo=%.17g hi=%.17g seed=%llu",
                to_string(kind).c_str(), sigma, p, lo, hi,
                static_cast<unsigned long long>(seed));
  return buf;
}

NoiseSpec NoiseSpec::from_key_value(const std::string& text) {
  NoiseSpec spec;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("noise spec token missing '=': " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "kind") {
      spec.kind = noise_kind_from_string(value);
    } else if (key == "sigma") {
      spec.sigma = std::stod(value);
    } else if (key == "p") {
      spec.p = std::stod(value);
    } else if (key == "lo") {
      spec.lo = std::stod(value);
    } else if (key == "hi") {
      spec.hi = std::stod(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else {
      throw std::invalid_argument("unknown noise spec key: " + key);
    }
  }
  spec.validate();
  return spec;
}

GrayImage add_gaussian(const GrayImage& img, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("noise sigma must be >= 0");
  GrayImage out(img.width, img.height);
  parallel_for(0, static_cast<std::int64_t>(img.pixel_count()), [&](std::int64_t k) {
    CounterRng rng(seed, static_cast<std::uint64_t>(k));
    out.pixels[static_cast<std::size_t>(k)] =
        img.pixels[static_cast<std::size_t>(k)] + sigma * rng.next_gaussian();
  });
  return out;
}

GrayImage add_impulse(const GrayImage& img, double p, double lo, double hi, std::uint64_t seed) {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("impulse probability must be in [0,1)");
  if (!(lo < hi)) throw std::invalid_argument("impulse range requires lo < hi");
  GrayImage out(img.width, img.height);
  parallel_for(0, static_cast<std::int64_t>(img.pixel_count()), [&](std::int64_t k) {
    CounterRng rng(seed, static_cast<std::uint64_t>(k));
    const double u = rng.next_unit();
    out.pixels[static_cast<std::size_t>(k)] =
        u < p ? lo + (hi - lo) * rng.next_unit() : img.pixels[static_cast<std::size_t>(k)];
  });
  return out;
}

GrayImage add_mixed(const GrayImage& img, double sigma, double p, std::uint64_t seed) {
  const GrayImage gauss = add_gaussian(img, sigma, derive_seed(seed, 1));
  return add_impulse(gauss, p, 0.0, 255.0, derive_seed(seed, 2));
}

GrayImage apply_noise(const GrayImage& img, const NoiseSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case NoiseKind::gaussian: return add_gaussian(img, spec.sigma, spec.seed);
    case NoiseKind::impulse: return add_impulse(img, spec.p, spec.lo, spec.hi, spec.seed);
    case NoiseKind::mixed: return add_mixed(img, spec.sigma, spec.p, spec.seed);
  }
  throw std::invalid_argument("unknown noise kind");
}

}  // namespace pwmf
