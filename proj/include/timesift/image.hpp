// Copyright (c) 2026 timesift contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace timesift {

// 8-bit grayscale raster image. Pixel (col x, row y) has its center at
// coordinates (x, y); x grows rightwards, y downwards.
struct Image8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  Image8() = default;
  Image8(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  bool inside(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
  std::size_t size() const { return pixels.size(); }
};

// Single-channel float image used by the scale-space code.
struct ImageF {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;

  ImageF() = default;
  ImageF(int w, int h, float fill = 0.f)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  float& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  float at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  bool inside(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
};

ImageF to_float(const Image8& img);
Image8 to_u8(const ImageF& img);

// Bilinear sample at (x, y) in pixel-center coordinates; clamps to the border.
double sample_bilinear(const Image8& img, double x, double y);
double sample_bilinear(const ImageF& img, double x, double y);

// Separable Gaussian blur; kernel radius ceil(4 sigma).
ImageF gaussian_blur(const ImageF& img, double sigma);

// Every second pixel, top-left aligned.
ImageF downsample_half(const ImageF& img);

// Binary PGM (P5), the on-disk format for rendered and preprocessed frames.
void write_pgm(const std::filesystem::path& path, const Image8& img);
Image8 read_pgm(const std::filesystem::path& path);

// FNV-1a over the pixel buffer plus dimensions; keys the feature caches.
std::uint64_t content_hash(const Image8& img);

}  // namespace timesift
