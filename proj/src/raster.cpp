// Copyright (c) 2026 timesift contributors
// SPDX-License-Identifier: Apache-2.0

#include "timesift/raster.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "timesift/errors.hpp"

namespace timesift {

RasterGrid::RasterGrid(double ox, double oy, double cell, int w, int h, double fill,
                       bool fill_valid)
    : origin_x(ox), origin_y(oy), cell_size(cell), width(w), height(h) {
  if (cell <= 0.0) throw InvalidArgumentError("cell_size must be > 0");
  if (w < 1 || h < 1) throw InvalidArgumentError("grid dimensions must be >= 1");
  values.assign(cells(), fill);
  valid.assign(cells(), fill_valid ? 1 : 0);
}

bool RasterGrid::same_geometry(const RasterGrid& other, double tol) const {
  return width == other.width && height == other.height &&
         std::abs(origin_x - other.origin_x) <= tol &&
         std::abs(origin_y - other.origin_y) <= tol &&
         std::abs(cell_size - other.cell_size) <= tol;
}

std::size_t RasterGrid::valid_count() const {
  std::size_t n = 0;
  for (auto v : valid) n += v != 0;
  return n;
}

std::optional<double> RasterGrid::sample(double x, double y) const {
  // Fractional position on the cell-center lattice.
  const double fc = (x - origin_x) / cell_size - 0.5;
  const double fr = (origin_y - y) / cell_size - 0.5;
  if (fc < 0.0 || fr < 0.0 || fc > width - 1 || fr > height - 1) return std::nullopt;
  int c0 = static_cast<int>(std::floor(fc));
  int r0 = static_cast<int>(std::floor(fr));
  c0 = std::min(c0, width - 2 >= 0 ? width - 2 : 0);
  r0 = std::min(r0, height - 2 >= 0 ? height - 2 : 0);
  const double wx = fc - c0;
  const double wy = fr - r0;
  const int c1 = std::min(c0 + 1, width - 1);
  const int r1 = std::min(r0 + 1, height - 1);
  // A cell with zero interpolation weight still poisons the result if it is
  // no-data only when its weight is nonzero.
  const double w00 = (1 - wx) * (1 - wy), w10 = wx * (1 - wy);
  const double w01 = (1 - wx) * wy, w11 = wx * wy;
  double acc = 0.0;
  const struct {
    int c, r;
    double w;
  } taps[4] = {{c0, r0, w00}, {c1, r0, w10}, {c0, r1, w01}, {c1, r1, w11}};
  for (const auto& t : taps) {
    if (t.w == 0.0) continue;
    if (!is_valid(t.c, t.r)) return std::nullopt;
    acc += t.w * value(t.c, t.r);
  }
  return acc;
}

RasterGrid resample_bilinear(const RasterGrid& grid, double target_cell_size) {
  if (target_cell_size <= 0.0) throw InvalidArgumentError("target cell size must be > 0");
  const double extent_x = grid.width * grid.cell_size;
  const double extent_y = grid.height * grid.cell_size;
  const int out_w = std::max(1, static_cast<int>(std::ceil(extent_x / target_cell_size - 1e-12)));
  const int out_h = std::max(1, static_cast<int>(std::ceil(extent_y / target_cell_size - 1e-12)));
  RasterGrid out(grid.origin_x, grid.origin_y, target_cell_size, out_w, out_h, 0.0, false);
  for (int r = 0; r < out_h; ++r) {
    const double y = out.center_y(r);
    for (int c = 0; c < out_w; ++c) {
      if (auto v = grid.sample(out.center_x(c), y)) out.set(c, r, *v);
    }
  }
  return out;
}

RasterGrid difference(const RasterGrid& a, const RasterGrid& b) {
  if (!a.same_geometry(b))
    throw GridMismatchError("difference requires identical grid geometry; resample explicitly");
  RasterGrid out(a.origin_x, a.origin_y, a.cell_size, a.width, a.height, 0.0, false);
  for (std::size_t i = 0; i < a.cells(); ++i) {
    if (a.valid[i] && b.valid[i]) {
      out.values[i] = a.values[i] - b.values[i];
      out.valid[i] = 1;
    }
  }
  return out;
}

RasterGrid threshold_abs(const RasterGrid& grid, double t) {
  if (t < 0.0) throw InvalidArgumentError("threshold must be >= 0");
  RasterGrid out(grid.origin_x, grid.origin_y, grid.cell_size, grid.width, grid.height, 0.0, false);
  for (std::size_t i = 0; i < grid.cells(); ++i) {
    if (grid.valid[i]) {
      out.values[i] = std::abs(grid.values[i]) > t ? 1.0 : 0.0;
      out.valid[i] = 1;
    }
  }
  return out;
}

std::vector<TransectSample> extract_transect(const RasterGrid& grid, double x0, double y0,
                                             double x1, double y1, double step) {
  if (step <= 0.0) throw InvalidArgumentError("transect step must be > 0");
  const double dx = x1 - x0, dy = y1 - y0;
  const double length = std::hypot(dx, dy);
  if (length == 0.0) throw InvalidArgumentError("degenerate transect: endpoints coincide");
  const double ux = dx / length, uy = dy / length;
  const int n = static_cast<int>(std::floor(length / step + 1e-9));
  std::vector<TransectSample> out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double d = k * step;
    TransectSample s;
    s.distance = d;
    s.elevation = grid.sample(x0 + d * ux, y0 + d * uy);
    out.push_back(s);
  }
  return out;
}

void write_asc(const std::filesystem::path& path, const RasterGrid& grid) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  f << "ncols " << grid.width << "\n";
  f << "nrows " << grid.height << "\n";
  f << "xllcorner " << fmt(grid.origin_x) << "\n";
  f << "yllcorner " << fmt(grid.origin_y - grid.height * grid.cell_size) << "\n";
  f << "cellsize " << fmt(grid.cell_size) << "\n";
  f << "NODATA_value -9999\n";
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      if (c) f << ' ';
      if (grid.is_valid(c, r)) {
        std::snprintf(buf, sizeof(buf), "%.3f", grid.value(c, r));
        f << buf;
      } else {
        f << "-9999";
      }
    }
    f << '\n';
  }
  if (!f) throw IoError("short write: " + path.string());
}

RasterGrid read_asc(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path.string());
  int ncols = -1, nrows = -1;
  double xll = 0, yll = 0, cell = 0, nodata = -9999;
  for (int i = 0; i < 6; ++i) {
    std::string key;
    f >> key;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (key == "ncols")
      f >> ncols;
    else if (key == "nrows")
      f >> nrows;
    else if (key == "xllcorner")
      f >> xll;
    else if (key == "yllcorner")
      f >> yll;
    else if (key == "cellsize")
      f >> cell;
    else if (key == "nodata_value")
      f >> nodata;
    else
      throw IoError("unexpected ASC header key '" + key + "' in " + path.string());
    if (!f) throw IoError("bad ASC header in " + path.string());
  }
  if (ncols < 1 || nrows < 1 || cell <= 0) throw IoError("invalid ASC geometry in " + path.string());
  RasterGrid grid(xll, yll + nrows * cell, cell, ncols, nrows, 0.0, false);
  for (int r = 0; r < nrows; ++r) {
    for (int c = 0; c < ncols; ++c) {
      double v;
      if (!(f >> v)) throw IoError("truncated ASC data in " + path.string());
      if (v != nodata) grid.set(c, r, v);
    }
  }
  return grid;
}

}  // namespace timesift
