#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pwmf/gray_image.hpp"

namespace pwmf {

/// File/parse failures from image I/O.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a binary PGM (P5) with maxval <= 255.
GrayImage read_pgm(const std::string& path);
GrayImage read_pgm(std::istream& in, const std::string& name);

/// Writes a binary PGM (P5, maxval 255). Values are rounded half away
/// from zero and clamped to [0,255]; 8-bit data round-trips bit-exactly.
void write_pgm(const GrayImage& img, const std::string& path);
void write_pgm(const GrayImage& img, std::ostream& out);

}  // namespace pwmf
