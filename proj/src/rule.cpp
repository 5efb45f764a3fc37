#include "lizardca/rule.hpp"

#include <algorithm>
#include <stdexcept>

#include "lizardca/field.hpp"

namespace lizardca {

std::uint8_t majority_next_state(std::uint8_t current,
                                 std::span<const std::uint8_t> neighbor_states, int k) {
  if (k < 2 || k > kMaxStates) {
    throw std::invalid_argument("state-out-of-range: alphabet size must be in [2, 256]");
  }
  if (neighbor_states.empty()) {
    throw std::invalid_argument("empty-neighborhood: the vote needs at least one neighbor");
  }
  if (current >= k) {
    throw std::invalid_argument("state-out-of-range: current state exceeds alphabet");
  }

  int counts[kMaxStates];
  std::fill_n(counts, k, 0);
  for (const std::uint8_t v : neighbor_states) {
    if (v >= k) throw std::invalid_argument("state-out-of-range: neighbor state exceeds alphabet");
    ++counts[v];
  }

  int max_count = 0;
  for (int v = 0; v < k; ++v) max_count = std::max(max_count, counts[v]);

  int smallest_winner = -1;
  int winners = 0;
  for (int v = 0; v < k; ++v) {
    if (counts[v] == max_count) {
      ++winners;
      if (smallest_winner < 0) smallest_winner = v;
    }
  }
  if (winners == 1) return static_cast<std::uint8_t>(smallest_winner);
  // Tie: keep the center if it is among the tied values, else smallest wins.
  return counts[current] == max_count ? current : static_cast<std::uint8_t>(smallest_winner);
}

}  // namespace lizardca
