#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lizardca/lattice.hpp"

namespace lizardca {

/// Everything one end-to-end run needs. Produced by parse_args; all fields
/// are validated (lattice invariants, probability sum, snapshot indices
/// within the action budget).
struct RunConfig {
  LatticeSpec lattice;
  int k = 2;
  std::vector<double> probabilities;
  std::uint64_t seed = 0;
  int max_actions = 10;
  std::vector<int> snapshots;  // sorted, unique
  int cell_px = 6;
  std::filesystem::path out_dir = "./out";

  enum class Init { Random, Checkerboard };
  Init init = Init::Random;  // Checkerboard is a testing hook (--init checkerboard)
};

struct ParseResult {
  enum class Status { Run, Help, Error };
  Status status = Status::Error;
  RunConfig config;
  std::string message;  // help text or error text
};

/// Parses flags (argv without the program name). Never prints or exits.
ParseResult parse_args(const std::vector<std::string>& args);

/// Builds the initial field, runs the automaton, writes pattern_A%04d.pgm
/// snapshots, trace.csv and run.txt into the output directory.
/// Returns 0 on success, 2 on a runtime/io failure (message on stderr).
int run_pipeline(const RunConfig& config);

}  // namespace lizardca
