// Copyright (c) 2026 timesift contributors
// SPDX-License-Identifier: Apache-2.0

#include "timesift/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "timesift/errors.hpp"

namespace timesift {

ImageF to_float(const Image8& img) {
  ImageF out(img.width, img.height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) out.pixels[i] = img.pixels[i];
  return out;
}

Image8 to_u8(const ImageF& img) {
  Image8 out(img.width, img.height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const float v = std::clamp(img.pixels[i], 0.f, 255.f);
    out.pixels[i] = static_cast<std::uint8_t>(std::lround(v));
  }
  return out;
}

namespace {

template <typename Img>
double sample_bilinear_impl(const Img& img, double x, double y) {
  x = std::clamp(x, 0.0, static_cast<double>(img.width - 1));
  y = std::clamp(y, 0.0, static_cast<double>(img.height - 1));
  const int x0 = std::min(static_cast<int>(x), img.width - 2 >= 0 ? img.width - 2 : 0);
  const int y0 = std::min(static_cast<int>(y), img.height - 2 >= 0 ? img.height - 2 : 0);
  const int x1 = std::min(x0 + 1, img.width - 1);
  const int y1 = std::min(y0 + 1, img.height - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  const double v00 = img.at(x0, y0), v10 = img.at(x1, y0);
  const double v01 = img.at(x0, y1), v11 = img.at(x1, y1);
  return (1 - fy) * ((1 - fx) * v00 + fx * v10) + fy * ((1 - fx) * v01 + fx * v11);
}

}  // namespace

double sample_bilinear(const Image8& img, double x, double y) {
  return sample_bilinear_impl(img, x, y);
}

double sample_bilinear(const ImageF& img, double x, double y) {
  return sample_bilinear_impl(img, x, y);
}

ImageF gaussian_blur(const ImageF& img, double sigma) {
  if (sigma <= 0) return img;
  const int radius = std::max(1, static_cast<int>(std::ceil(4.0 * sigma)));
  std::vector<float> kernel(2 * radius + 1);
  double sum = 0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-0.5 * (i * i) / (sigma * sigma));
    kernel[i + radius] = static_cast<float>(w);
    sum += w;
  }
  for (auto& k : kernel) k = static_cast<float>(k / sum);

  const int w = img.width, h = img.height;
  ImageF tmp(w, h), out(w, h);
  // horizontal
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0;
      for (int i = -radius; i <= radius; ++i) {
        const int xx = std::clamp(x + i, 0, w - 1);
        acc += kernel[i + radius] * img.at(xx, y);
      }
      tmp.at(x, y) = static_cast<float>(acc);
    }
  }
  // vertical
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0;
      for (int i = -radius; i <= radius; ++i) {
        const int yy = std::clamp(y + i, 0, h - 1);
        acc += kernel[i + radius] * tmp.at(x, yy);
      }
      out.at(x, y) = static_cast<float>(acc);
    }
  }
  return out;
}

ImageF downsample_half(const ImageF& img) {
  const int w = std::max(1, img.width / 2);
  const int h = std::max(1, img.height / 2);
  ImageF out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.at(x, y) = img.at(2 * x, 2 * y);
  return out;
}

void write_pgm(const std::filesystem::path& path, const Image8& img) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f << "P5\n" << img.width << " " << img.height << "\n255\n";
  f.write(reinterpret_cast<const char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (!f) throw IoError("short write: " + path.string());
}

Image8 read_pgm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path.string());
  std::string magic;
  f >> magic;
  if (magic != "P5") throw IoError("not a binary PGM: " + path.string());
  auto next_int = [&f, &path]() {
    // Skip whitespace and '#' comment lines.
    int c = f.peek();
    while (c == '#' || std::isspace(c)) {
      if (c == '#') {
        std::string line;
        std::getline(f, line);
      } else {
        f.get();
      }
      c = f.peek();
    }
    long v = -1;
    f >> v;
    if (!f || v < 0) throw IoError("bad PGM header: " + path.string());
    return v;
  };
  const long w = next_int();
  const long h = next_int();
  const long maxval = next_int();
  if (maxval != 255) throw IoError("only 8-bit PGM supported: " + path.string());
  f.get();  // single whitespace after header
  Image8 img(static_cast<int>(w), static_cast<int>(h));
  f.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.size()));
  if (f.gcount() != static_cast<std::streamsize>(img.size()))
    throw IoError("truncated PGM: " + path.string());
  return img;
}

std::uint64_t content_hash(const Image8& img) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(img.width));
  mix(static_cast<std::uint64_t>(img.height));
  for (std::uint8_t p : img.pixels) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace timesift
