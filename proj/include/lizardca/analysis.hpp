#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lizardca/automaton.hpp"

namespace lizardca {

struct ReportRow {
  int action;
  std::uint64_t delta_n;
  std::uint64_t cumulative_n;
  bool operator==(const ReportRow&) const = default;
};

struct RunMeta {
  std::uint64_t seed = 0;
  std::string lattice;  // describe(LatticeSpec)
  std::string rule;
};

/// Per-action convergence data plus provenance, one row per executed action.
struct ConvergenceReport {
  std::vector<ReportRow> rows;
  Termination termination;
  RunMeta meta;
};

ConvergenceReport build_report(const RunTrace& trace, RunMeta meta);

/// CSV with '#'-prefixed provenance lines, then the header
/// `action,delta_n,cumulative_n`, then one row per action. LF line endings,
/// no trailing blank line. Byte layout is pinned in docs/FORMATS.md.
void write_csv(const ConvergenceReport& report, std::ostream& os);
void write_csv(const ConvergenceReport& report, const std::filesystem::path& path);

}  // namespace lizardca
