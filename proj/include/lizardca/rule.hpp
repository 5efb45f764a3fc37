#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace lizardca {

/// Local update map: the next state of a cell from its current state and the
/// multiset of its neighbors' states. Implementations must be deterministic,
/// insensitive to the order of the neighbor list, closed over [0, k), and
/// must not throw for in-range inputs (the step kernel calls them from a
/// parallel region).
class Rule {
 public:
  virtual ~Rule() = default;

  virtual std::uint8_t next_state(std::uint8_t current,
                                  std::span<const std::uint8_t> neighbor_states,
                                  int k) const = 0;

  virtual std::string_view name() const = 0;
};

/// Plurality vote over the neighborhood. A unique most-frequent neighbor
/// state wins. On a tie the center keeps its state if it is among the tied
/// values, otherwise the smallest tied value wins. With two states on the
/// hexagonal lattice the only possible tie is 3-3, where the center keeps.
///
/// Throws std::invalid_argument on an empty neighborhood or any state >= k.
std::uint8_t majority_next_state(std::uint8_t current,
                                 std::span<const std::uint8_t> neighbor_states, int k);

class MajorityRule final : public Rule {
 public:
  std::uint8_t next_state(std::uint8_t current, std::span<const std::uint8_t> neighbor_states,
                          int k) const override {
    return majority_next_state(current, neighbor_states, k);
  }

  std::string_view name() const override { return "majority"; }
};

}  // namespace lizardca
