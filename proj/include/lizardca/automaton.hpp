#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lizardca/field.hpp"
#include "lizardca/rule.hpp"

namespace lizardca {

struct StepResult {
  Field next;
  std::uint64_t delta;  // cells that changed, equals hamming(old, next)
};

/// One synchronous action: every cell's next state is computed from the OLD
/// field, so the result is independent of traversal order. This is the
/// optimized kernel, OpenMP-parallel over rows when built with OpenMP; output
/// is bit-identical to step_reference in every configuration.
StepResult step(const Field& f, const Rule& rule);

/// Straightforward restatement of the update (bounds-checked lookups, one
/// cell at a time). Kept as the serial baseline the kernel is tested and
/// benchmarked against.
StepResult step_reference(const Field& f, const Rule& rule);

enum class TerminationKind { FixedPoint, Cycle, BudgetExhausted };

struct Termination {
  TerminationKind kind = TerminationKind::BudgetExhausted;
  /// FixedPoint: the first action with delta 0. Cycle: the action at which
  /// the repeat was seen. BudgetExhausted: max_actions.
  int at_action = 0;
  int period = 0;  // Cycle only, minimal and >= 2
  bool operator==(const Termination&) const = default;
};

std::string describe(const Termination& t);

struct RunTrace {
  std::vector<std::uint64_t> deltas;      // deltas[i] is action i+1
  std::vector<std::uint64_t> cumulative;  // running sum of deltas
  Termination termination;
};

struct RunOptions {
  int max_actions = 10;
  std::set<int> snapshot_schedule;  // action indices to keep; 0 means the initial field
  int cycle_window = 64;            // how many recent fields to remember for cycle detection
};

struct RunResult {
  RunTrace trace;
  std::map<int, Field> snapshots;  // only indices actually reached
  Field final_field;               // field after the last executed action
};

/// Applies the rule repeatedly, recording the per-action change count.
/// Stops at the first action with delta 0 (fixed point), or when the current
/// field exactly matches one of the last `cycle_window` fields (cycle of
/// period p, confirmed by full comparison after a digest hit), or after
/// max_actions.
RunResult run(const Field& initial, const Rule& rule, const RunOptions& options);

}  // namespace lizardca
