#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lizardca {

enum class LatticeKind { Hexagonal, Quadratic };
enum class Boundary { Periodic, Clamped };
enum class QuadNeighborhood { VonNeumann4, Moore8 };

struct CellIndex {
  int col = 0;
  int row = 0;
  bool operator==(const CellIndex&) const = default;
};

/// Geometry of a rectangular cell lattice: kind, dimensions, boundary policy
/// and (for quadratic lattices) the neighborhood. Hexagonal cells are stored
/// odd-r: a plain width x height rectangle where odd rows are staggered half
/// a cell to the right, pointy-top. Construct through build_lattice(), which
/// enforces the size and parity requirements.
struct LatticeSpec {
  LatticeKind kind = LatticeKind::Hexagonal;
  int width = 0;
  int height = 0;
  Boundary boundary = Boundary::Periodic;
  QuadNeighborhood quad_neighborhood = QuadNeighborhood::VonNeumann4;  // ignored for hex
  bool operator==(const LatticeSpec&) const = default;
};

/// Validates and returns a lattice. Throws std::invalid_argument on
/// dimension-too-small (width or height < 2) and hex-periodic-odd-height
/// (odd-r offsets tile a torus consistently only with an even row count).
LatticeSpec build_lattice(LatticeKind kind, int width, int height, Boundary boundary,
                          QuadNeighborhood quad_neighborhood = QuadNeighborhood::VonNeumann4);

int cell_count(const LatticeSpec& lattice);

bool in_bounds(const LatticeSpec& lattice, CellIndex cell);

/// Short readable form used in provenance output, e.g. "hex 100x100 periodic"
/// or "quad-moore8 8x8 clamped".
std::string describe(const LatticeSpec& lattice);

inline std::size_t flat_index(const LatticeSpec& lattice, CellIndex cell) {
  return static_cast<std::size_t>(cell.row) * lattice.width + cell.col;
}

namespace detail {

struct Offset {
  int dc, dr;
};

// Neighbor offsets, center excluded. Order is part of the contract.
// Hex (odd-r, pointy-top) depends on row parity: W, E, NW, NE, SW, SE.
inline constexpr std::array<Offset, 6> kHexEvenRow{
    {{-1, 0}, {1, 0}, {-1, -1}, {0, -1}, {-1, 1}, {0, 1}}};
inline constexpr std::array<Offset, 6> kHexOddRow{
    {{-1, 0}, {1, 0}, {0, -1}, {1, -1}, {0, 1}, {1, 1}}};
// Quadratic: W, E, N, S; Moore8 appends NW, NE, SW, SE.
inline constexpr std::array<Offset, 8> kQuad{
    {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, -1}, {-1, 1}, {1, 1}}};

inline std::span<const Offset> offsets_for(const LatticeSpec& lattice, int row) {
  if (lattice.kind == LatticeKind::Hexagonal) {
    return (row & 1) ? std::span<const Offset>(kHexOddRow) : std::span<const Offset>(kHexEvenRow);
  }
  const std::size_t n = lattice.quad_neighborhood == QuadNeighborhood::Moore8 ? 8 : 4;
  return {kQuad.data(), n};
}

}  // namespace detail

/// Writes the neighborhood of `cell` into `out` and returns the count.
/// Unchecked hot path: the caller guarantees `cell` is in bounds. Periodic
/// boundaries wrap; Clamped drops out-of-bounds entries, so the list shrinks
/// at the border. Width/height of 2 under Periodic yield duplicate entries,
/// which is intentional (they count twice in any vote).
inline int neighbors_into(const LatticeSpec& lattice, CellIndex cell,
                          std::array<CellIndex, 8>& out) {
  const auto offsets = detail::offsets_for(lattice, cell.row);
  int n = 0;
  if (lattice.boundary == Boundary::Periodic) {
    for (const auto& o : offsets) {
      int c = cell.col + o.dc;
      int r = cell.row + o.dr;
      if (c < 0) c += lattice.width;
      else if (c >= lattice.width) c -= lattice.width;
      if (r < 0) r += lattice.height;
      else if (r >= lattice.height) r -= lattice.height;
      out[n++] = {c, r};
    }
  } else {
    for (const auto& o : offsets) {
      const int c = cell.col + o.dc;
      const int r = cell.row + o.dr;
      if (c < 0 || c >= lattice.width || r < 0 || r >= lattice.height) continue;
      out[n++] = {c, r};
    }
  }
  return n;
}

/// Bounds-checked neighborhood in the documented offset order.
/// Throws std::out_of_range (cell-out-of-bounds) for cells outside the lattice.
std::vector<CellIndex> neighbors(const LatticeSpec& lattice, CellIndex cell);

}  // namespace lizardca
