#include "lizardca/field.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lizardca/rng.hpp"

namespace lizardca {

Field::Field(const LatticeSpec& lattice, int k)
    : Field(lattice, k, std::vector<std::uint8_t>(static_cast<std::size_t>(cell_count(lattice)), 0)) {}

Field::Field(const LatticeSpec& lattice, int k, std::vector<std::uint8_t> states)
    : lattice_(lattice), k_(k), states_(std::move(states)) {
  if (k_ < 2 || k_ > kMaxStates) {
    throw std::invalid_argument("state-out-of-range: alphabet size must be in [2, 256]");
  }
  if (states_.size() != static_cast<std::size_t>(cell_count(lattice_))) {
    throw std::invalid_argument("shape-mismatch: state array length must equal width*height");
  }
  for (const std::uint8_t s : states_) {
    if (s >= k_) throw std::invalid_argument("state-out-of-range: cell state exceeds alphabet");
  }
}

std::uint8_t Field::at(CellIndex cell) const {
  if (!in_bounds(lattice_, cell)) {
    throw std::out_of_range("cell-out-of-bounds: (" + std::to_string(cell.col) + "," +
                            std::to_string(cell.row) + ")");
  }
  return states_[flat_index(lattice_, cell)];
}

void validate_init(const InitSpec& init) {
  if (init.k < 2 || init.k > kMaxStates) {
    throw std::invalid_argument("invalid-probabilities: alphabet size must be in [2, 256]");
  }
  if (init.probabilities.size() != static_cast<std::size_t>(init.k)) {
    throw std::invalid_argument(
        "invalid-probabilities: need exactly one probability per state");
  }
  double sum = 0.0;
  for (const double p : init.probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("invalid-probabilities: weights must be finite and nonnegative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw std::invalid_argument("invalid-probabilities: weights must sum to 1");
  }
}

Field random_field(const LatticeSpec& lattice, const InitSpec& init) {
  validate_init(init);
  const auto& p = init.probabilities;

  // If rounding leaves the cumulative sum a hair short of 1, the residual
  // sliver maps to the last state that actually has weight.
  int last_positive = 0;
  for (int v = 0; v < init.k; ++v) {
    if (p[v] > 0.0) last_positive = v;
  }

  SplitMix64 rng(init.seed);
  std::vector<std::uint8_t> states(static_cast<std::size_t>(cell_count(lattice)));
  for (auto& cell : states) {
    const double u = rng.next_double();
    int chosen = last_positive;
    double cum = 0.0;
    for (int v = 0; v < init.k; ++v) {
      cum += p[v];
      if (u < cum) {
        chosen = v;
        break;
      }
    }
    cell = static_cast<std::uint8_t>(chosen);
  }
  return Field(lattice, init.k, std::move(states));
}

Field checkerboard_field(const LatticeSpec& lattice) {
  std::vector<std::uint8_t> states(static_cast<std::size_t>(cell_count(lattice)));
  for (int row = 0; row < lattice.height; ++row) {
    for (int col = 0; col < lattice.width; ++col) {
      states[flat_index(lattice, {col, row})] = static_cast<std::uint8_t>((col + row) & 1);
    }
  }
  return Field(lattice, 2, std::move(states));
}

std::uint64_t hamming(const Field& a, const Field& b) {
  if (a.lattice().width != b.lattice().width || a.lattice().height != b.lattice().height ||
      a.k() != b.k()) {
    throw std::invalid_argument("shape-mismatch: hamming needs equal dimensions and alphabet");
  }
  const auto sa = a.states();
  const auto sb = b.states();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) count += sa[i] != sb[i];
  return count;
}

std::uint64_t digest(const Field& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  const auto mix_u32 = [&mix](std::uint32_t v) {
    mix(static_cast<std::uint8_t>(v));
    mix(static_cast<std::uint8_t>(v >> 8));
    mix(static_cast<std::uint8_t>(v >> 16));
    mix(static_cast<std::uint8_t>(v >> 24));
  };
  mix_u32(static_cast<std::uint32_t>(f.lattice().width));
  mix_u32(static_cast<std::uint32_t>(f.lattice().height));
  mix_u32(static_cast<std::uint32_t>(f.k()));
  for (const std::uint8_t s : f.states()) mix(s);
  return h;
}

Field relabel(const Field& f, std::span<const std::uint8_t> perm) {
  const int k = f.k();
  if (perm.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("not-a-permutation: need exactly one image per state");
  }
  bool seen[kMaxStates] = {};
  for (const std::uint8_t v : perm) {
    if (v >= k || seen[v]) throw std::invalid_argument("not-a-permutation: images must be a bijection of [0,k)");
    seen[v] = true;
  }
  std::vector<std::uint8_t> states(f.size());
  const auto src = f.states();
  for (std::size_t i = 0; i < states.size(); ++i) states[i] = perm[src[i]];
  return Field(f.lattice(), k, std::move(states));
}

void write_field_text(const Field& f, std::ostream& os) {
  const auto& l = f.lattice();
  os << l.width << ' ' << l.height << ' ' << f.k() << '\n';
  for (int row = 0; row < l.height; ++row) {
    for (int col = 0; col < l.width; ++col) {
      if (col) os << ' ';
      os << static_cast<int>(f[flat_index(l, {col, row})]);
    }
    os << '\n';
  }
}

void write_field_text(const Field& f, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("io-failure: cannot open " + path.string());
  write_field_text(f, os);
  os.flush();
  if (!os) throw std::runtime_error("io-failure: cannot write " + path.string());
}

Field read_field_text(std::istream& is, LatticeKind kind, Boundary boundary,
                      QuadNeighborhood quad_neighborhood) {
  int width = 0, height = 0, k = 0;
  if (!(is >> width >> height >> k)) {
    throw std::runtime_error("io-failure: malformed field snapshot header");
  }
  const LatticeSpec lattice = build_lattice(kind, width, height, boundary, quad_neighborhood);
  std::vector<std::uint8_t> states(static_cast<std::size_t>(cell_count(lattice)));
  for (auto& s : states) {
    int v = 0;
    if (!(is >> v) || v < 0 || v >= kMaxStates) {
      throw std::runtime_error("io-failure: malformed field snapshot body");
    }
    s = static_cast<std::uint8_t>(v);
  }
  return Field(lattice, k, std::move(states));
}

}  // namespace lizardca
