// Copyright (c) 2026 timesift contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace timesift {

// Georeferenced single-band grid with an explicit validity mask. Ground
// coordinates are planar (east x, north y); the origin is the upper-left
// corner of the upper-left cell, and rows run north to south. Cell (col, row)
// has its center at
//   x = origin_x + (col + 0.5) * cell_size
//   y = origin_y - (row + 0.5) * cell_size
// Files use the ESRI ASCII grid convention with a -9999 sentinel; in memory
// invalidity is always the mask, never a magic value.
struct RasterGrid {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double cell_size = 1.0;
  int width = 0;
  int height = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> valid;

  RasterGrid() = default;
  RasterGrid(double ox, double oy, double cell, int w, int h, double fill = 0.0,
             bool fill_valid = true);

  std::size_t cells() const { return static_cast<std::size_t>(width) * height; }
  std::size_t idx(int col, int row) const { return static_cast<std::size_t>(row) * width + col; }

  double& value(int col, int row) { return values[idx(col, row)]; }
  double value(int col, int row) const { return values[idx(col, row)]; }
  bool is_valid(int col, int row) const { return valid[idx(col, row)] != 0; }
  void set(int col, int row, double v) {
    values[idx(col, row)] = v;
    valid[idx(col, row)] = 1;
  }
  void set_nodata(int col, int row) {
    values[idx(col, row)] = 0.0;
    valid[idx(col, row)] = 0;
  }

  double center_x(int col) const { return origin_x + (col + 0.5) * cell_size; }
  double center_y(int row) const { return origin_y - (row + 0.5) * cell_size; }

  // Column/row of the cell containing ground point (x, y), unchecked.
  int col_of(double x) const { return static_cast<int>(std::floor((x - origin_x) / cell_size)); }
  int row_of(double y) const { return static_cast<int>(std::floor((origin_y - y) / cell_size)); }

  bool same_geometry(const RasterGrid& other, double tol = 1e-9) const;
  std::size_t valid_count() const;

  // Bilinear interpolation between the four surrounding cell centers.
  // Returns nullopt outside the center lattice or when any contributing cell
  // is no-data.
  std::optional<double> sample(double x, double y) const;
};

// Resamples onto a grid with the same origin covering the same ground extent.
RasterGrid resample_bilinear(const RasterGrid& grid, double target_cell_size);

// Cellwise a - b. Inputs must share origin, cell size and dimensions;
// mismatches throw GridMismatchError rather than resampling implicitly.
RasterGrid difference(const RasterGrid& a, const RasterGrid& b);

// Binary mask: 1 where |value| > t, 0 otherwise, no-data preserved.
RasterGrid threshold_abs(const RasterGrid& grid, double t);

struct TransectSample {
  double distance = 0.0;
  std::optional<double> elevation;
};

// Bilinear profile from p0 to p1 at uniform spacing. Samples outside the
// extent or touching no-data cells carry an empty elevation.
std::vector<TransectSample> extract_transect(const RasterGrid& grid, double x0, double y0,
                                             double x1, double y1, double step);

// ESRI ASCII grid IO. Values are written with 3 decimals, no-data as -9999.
void write_asc(const std::filesystem::path& path, const RasterGrid& grid);
RasterGrid read_asc(const std::filesystem::path& path);

}  // namespace timesift
