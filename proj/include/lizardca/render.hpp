#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "lizardca/field.hpp"

namespace lizardca {

/// Grayscale pixel grid, row-major, 0 = black and 255 = white.
struct Raster {
  int width_px = 0;
  int height_px = 0;
  std::vector<std::uint8_t> pixels;
  bool operator==(const Raster&) const = default;
};

struct RenderConfig {
  /// Square edge for quadratic cells; hexagon circumradius for hex cells.
  int cell_px = 6;
  /// Gray value per state. Empty means default_palette(field k).
  std::vector<std::uint8_t> palette;
};

/// Evenly spaced grays: state v -> round(255 * (1 - v / (k - 1))).
/// Two states give 255 (light) and 0 (dark).
std::vector<std::uint8_t> default_palette(int k);

/// Each cell becomes a solid cell_px x cell_px block.
Raster render_quad(const Field& f, const RenderConfig& cfg);

/// Pointy-top hexagons in odd-r layout. Cell (col,row) is centered at
///   x = cell_px * sqrt(3) * (col + 0.5 * (row mod 2)) + margin
///   y = cell_px * 1.5 * row + margin,          margin = cell_px.
/// A pixel (sampled at its center) takes the state of the nearest hexagon
/// center, distance ties broken by smaller row then column; pixels outside
/// the hexagon tiling stay background 255. Raster size:
///   width_px  = ceil(cell_px * sqrt(3) * (width + 0.5) + 2 * margin)
///   height_px = ceil(cell_px * (1.5 * height + 0.5) + 2 * margin).
Raster render_hex(const Field& f, const RenderConfig& cfg);

/// Dispatches on the field's lattice kind.
Raster render(const Field& f, const RenderConfig& cfg);

/// Binary PGM: `P5\n<width> <height>\n255\n` followed by the raw bytes.
void write_pgm(const Raster& r, std::ostream& os);
void write_pgm(const Raster& r, const std::filesystem::path& path);

}  // namespace lizardca
