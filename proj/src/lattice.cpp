#include "lizardca/lattice.hpp"

#include <stdexcept>

namespace lizardca {

LatticeSpec build_lattice(LatticeKind kind, int width, int height, Boundary boundary,
                          QuadNeighborhood quad_neighborhood) {
  if (width < 2 || height < 2) {
    throw std::invalid_argument("dimension-too-small: lattice needs width >= 2 and height >= 2");
  }
  if (kind == LatticeKind::Hexagonal && boundary == Boundary::Periodic && (height % 2) != 0) {
    throw std::invalid_argument(
        "hex-periodic-odd-height: a periodic hexagonal lattice needs an even row count");
  }
  // The hex neighborhood is always the six nearest cells; normalize the
  // ignored member so value equality does not depend on it.
  if (kind == LatticeKind::Hexagonal) quad_neighborhood = QuadNeighborhood::VonNeumann4;
  return LatticeSpec{kind, width, height, boundary, quad_neighborhood};
}

int cell_count(const LatticeSpec& lattice) { return lattice.width * lattice.height; }

bool in_bounds(const LatticeSpec& lattice, CellIndex cell) {
  return cell.col >= 0 && cell.col < lattice.width && cell.row >= 0 && cell.row < lattice.height;
}

std::string describe(const LatticeSpec& lattice) {
  std::string s;
  if (lattice.kind == LatticeKind::Hexagonal) {
    s = "hex";
  } else {
    s = lattice.quad_neighborhood == QuadNeighborhood::Moore8 ? "quad-moore8" : "quad-vn4";
  }
  s += ' ';
  s += std::to_string(lattice.width);
  s += 'x';
  s += std::to_string(lattice.height);
  s += lattice.boundary == Boundary::Periodic ? " periodic" : " clamped";
  return s;
}

std::vector<CellIndex> neighbors(const LatticeSpec& lattice, CellIndex cell) {
  if (!in_bounds(lattice, cell)) {
    throw std::out_of_range("cell-out-of-bounds: (" + std::to_string(cell.col) + "," +
                            std::to_string(cell.row) + ") outside " + describe(lattice));
  }
  std::array<CellIndex, 8> buffer;
  const int n = neighbors_into(lattice, cell, buffer);
  return {buffer.begin(), buffer.begin() + n};
}

}  // namespace lizardca
