#include "pwmf/pgm_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace pwmf {

namespace {

// Skips whitespace and '#' comment lines, then reads one unsigned integer.
long read_header_int(std::istream& in, const std::string& name) {
  int c = in.peek();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else {
      in.get();
    }
    c = in.peek();
  }
  long value = -1;
  if (!(in >> value) || value < 0) throw io_error(name + ": malformed PGM header");
  return value;
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path + ": cannot open for reading");
  return read_pgm(in, path);
}

GrayImage read_pgm(std::istream& in, const std::string& name) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') throw io_error(name + ": not a binary PGM (P5)");
  const long width = read_header_int(in, name);
  const long height = read_header_int(in, name);
  const long maxval = read_header_int(in, name);
  if (width <= 0 || height <= 0) throw io_error(name + ": bad dimensions");
  if (maxval <= 0 || maxval > 255) throw io_error(name + ": unsupported maxval (expected <= 255)");
  in.get();  // single whitespace byte after maxval

  GrayImage img(static_cast<int>(width), static_cast<int>(height));
  std::string raw(img.pixel_count(), '\0');
  in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size()))
    throw io_error(name + ": truncated pixel data");
  for (std::size_t k = 0; k < raw.size(); ++k)
    img.pixels[k] = static_cast<double>(static_cast<unsigned char>(raw[k]));
  return img;
}

void write_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error(path + ": cannot open for writing");
  write_pgm(img, out);
  if (!out) throw io_error(path + ": write failed");
}

void write_pgm(const GrayImage& img, std::ostream& out) {
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::string raw(img.pixel_count(), '\0');
  for (std::size_t k = 0; k < raw.size(); ++k) {
    long q = std::lround(img.pixels[k]);  // rounds half away from zero
    if (q < 0) q = 0;
    if (q > 255) q = 255;
    raw[k] = static_cast<char>(static_cast<unsigned char>(q));
  }
  out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
}

}  // namespace pwmf
