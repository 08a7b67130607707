#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uga/scalars/numeric.hpp"
#include "uga/scalars/padic.hpp"

namespace uga {

/// One finitely supported matrix A^(l) over N x N with its declared norm bound.
struct ConvergenceStage {
  std::uint64_t index = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, PadicScalar> entries;
  Rational bound = 1;
};

struct ConvergenceInput {
  PadicField field;
  std::vector<ConvergenceStage> stages;
  std::vector<std::uint64_t> column_set;
  std::uint64_t tail_index = 0;
  Rational threshold = 1;
};

enum class ConvergenceVerdict { ConvergesEvidence, FailsBound, FailsColumnDecay };

const char* to_string(ConvergenceVerdict verdict);

struct ColumnDecay {
  std::uint64_t column;
  /// Largest |a_{i,j}| over rows i and stages at or beyond the tail index.
  Rational tail_sup;
  bool decays;
};

struct ProbeTranscript {
  std::string name;
  /// (stage index, ||A^(l) f||) for every stage.
  std::vector<std::pair<std::uint64_t, Rational>> norms;
  /// ||A^(l) f|| < threshold * C at every stage at or beyond the tail index.
  bool within_threshold;
};

struct ConvergenceReport {
  ConvergenceVerdict verdict;
  /// C: the largest declared bound.
  Rational uniform_bound;
  std::vector<std::pair<std::uint64_t, Rational>> stage_norms;
  bool bound_holds;
  /// Stages whose norm exceeds their declared bound.
  std::vector<std::uint64_t> bound_violations;
  bool column_decay_holds;
  std::vector<ColumnDecay> columns;
  std::vector<ProbeTranscript> probes;
  bool probes_converge;
  /// Probe outcome matches the verdict from the bound and column checks.
  bool probes_agree;
};

/// Checks the norm bound and column decay on the given stages, then
/// cross-validates with the probe vectors delta_j (j in the column set) and
/// the decay vector f_j = p^ceil(j/2) over every column that occurs.
ConvergenceReport strong_convergence_check(const ConvergenceInput& input);

/// Built-in scenarios: "scalar-decay", "column-shift", "unbounded-growth".
std::vector<std::string> convergence_scenarios();
ConvergenceInput convergence_scenario(const std::string& name);

}  // namespace uga
