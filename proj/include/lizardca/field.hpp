#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "lizardca/lattice.hpp"

namespace lizardca {

/// States are stored one byte per cell, which caps the alphabet.
inline constexpr int kMaxStates = 256;

/// Tolerance for the sum of InitSpec probabilities.
inline constexpr double kProbabilitySumTolerance = 1e-9;

/// One state per cell over a lattice, row-major. Immutable after
/// construction; every entry is < k. New fields are made, never edited.
class Field {
 public:
  /// All cells in state 0.
  Field(const LatticeSpec& lattice, int k);
  /// Takes ownership of `states`; validates length and range.
  Field(const LatticeSpec& lattice, int k, std::vector<std::uint8_t> states);

  const LatticeSpec& lattice() const { return lattice_; }
  int k() const { return k_; }
  std::span<const std::uint8_t> states() const { return states_; }
  std::size_t size() const { return states_.size(); }

  std::uint8_t at(CellIndex cell) const;  // bounds-checked
  std::uint8_t operator[](std::size_t flat) const { return states_[flat]; }

  bool operator==(const Field&) const = default;

 private:
  LatticeSpec lattice_;
  int k_;
  std::vector<std::uint8_t> states_;
};

/// Seed plus categorical cell-state distribution for random initial fields.
struct InitSpec {
  int k = 2;
  std::vector<double> probabilities;  // length k, nonnegative, sums to 1 within 1e-9
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument (invalid-probabilities) if the spec is unusable.
void validate_init(const InitSpec& init);

/// I.i.d. categorical field: cells are filled row-major with one splitmix64
/// draw each, bucketed by cumulative weight (docs/FORMATS.md pins the exact
/// procedure). Bitwise reproducible from (lattice, init).
Field random_field(const LatticeSpec& lattice, const InitSpec& init);

/// Two-state field with state (col + row) mod 2. On an even-sized periodic
/// von-Neumann lattice this is the canonical period-2 pattern.
Field checkerboard_field(const LatticeSpec& lattice);

/// Number of positions where the fields differ. Requires equal dimensions
/// and alphabet (shape-mismatch otherwise).
std::uint64_t hamming(const Field& a, const Field& b);

/// FNV-1a 64 over (width, height, k, states). Equal fields hash equal;
/// stable across runs and platforms.
std::uint64_t digest(const Field& f);

/// Applies a permutation of [0, k) to every cell state.
/// Throws std::invalid_argument (not-a-permutation) if perm is not a bijection.
Field relabel(const Field& f, std::span<const std::uint8_t> perm);

/// Plain-text snapshot: "width height k" then height rows of width integers.
void write_field_text(const Field& f, std::ostream& os);
void write_field_text(const Field& f, const std::filesystem::path& path);

/// Reads the text snapshot back. The format carries only dimensions and
/// states, so lattice kind/boundary are supplied by the caller.
Field read_field_text(std::istream& is, LatticeKind kind, Boundary boundary,
                      QuadNeighborhood quad_neighborhood = QuadNeighborhood::VonNeumann4);

}  // namespace lizardca
