#include "uga/operators/convergence.hpp"

#include <algorithm>
#include <set>

#include "uga/errors.hpp"
#include "uga/groups/finite_group.hpp"

namespace uga {

const char* to_string(ConvergenceVerdict verdict) {
  switch (verdict) {
    case ConvergenceVerdict::ConvergesEvidence: return "ConvergesEvidence";
    case ConvergenceVerdict::FailsBound: return "FailsBound";
    case ConvergenceVerdict::FailsColumnDecay: return "FailsColumnDecay";
  }
  return "?";
}

namespace {

using Vector = std::map<std::uint64_t, PadicScalar>;

Rational stage_norm(const ConvergenceStage& stage) {
  Rational best = 0;
  for (const auto& [ij, a] : stage.entries) best = std::max(best, a.norm());
  return best;
}

Rational image_norm(const ConvergenceStage& stage, const Vector& f, const PadicField& field) {
  std::map<std::uint64_t, PadicScalar> image;
  for (const auto& [ij, a] : stage.entries) {
    const auto it = f.find(ij.second);
    if (it == f.end()) continue;
    auto [slot, fresh] = image.try_emplace(ij.first, field.zero());
    slot->second = slot->second + a * it->second;
  }
  Rational best = 0;
  for (const auto& [i, y] : image) best = std::max(best, y.norm());
  return best;
}

}  // namespace

ConvergenceReport strong_convergence_check(const ConvergenceInput& input) {
  if (input.stages.empty()) fail(ErrorKind::EmptyInput, "no convergence stages");
  if (input.threshold <= 0) fail(ErrorKind::InvalidArgument, "threshold must be positive");
  std::vector<const ConvergenceStage*> stages;
  for (const auto& s : input.stages) {
    if (s.bound <= 0) fail(ErrorKind::InvalidArgument, "stage bound must be positive");
    for (const auto& [ij, a] : s.entries)
      if (a.prime() != input.field.p) fail(ErrorKind::PrimeMismatch, "stage entry over a different prime");
    stages.push_back(&s);
  }
  std::sort(stages.begin(), stages.end(), [](auto* a, auto* b) { return a->index < b->index; });
  for (std::size_t i = 1; i < stages.size(); ++i)
    if (stages[i]->index == stages[i - 1]->index) fail(ErrorKind::InvalidArgument, "duplicate stage index");

  ConvergenceReport report;
  report.uniform_bound = 0;
  report.bound_holds = true;
  for (const auto* s : stages) {
    report.uniform_bound = std::max(report.uniform_bound, s->bound);
    const Rational norm = stage_norm(*s);
    report.stage_norms.emplace_back(s->index, norm);
    if (norm > s->bound) {
      report.bound_holds = false;
      report.bound_violations.push_back(s->index);
    }
  }

  std::set<std::uint64_t> column_set(input.column_set.begin(), input.column_set.end());
  report.column_decay_holds = true;
  for (const auto j : column_set) {
    ColumnDecay col{j, 0, true};
    for (const auto* s : stages) {
      if (s->index < input.tail_index) continue;
      for (const auto& [ij, a] : s->entries)
        if (ij.second == j) col.tail_sup = std::max(col.tail_sup, a.norm());
    }
    col.decays = col.tail_sup < input.threshold;
    report.column_decay_holds = report.column_decay_holds && col.decays;
    report.columns.push_back(col);
  }

  report.verdict = !report.bound_holds            ? ConvergenceVerdict::FailsBound
                   : !report.column_decay_holds ? ConvergenceVerdict::FailsColumnDecay
                                                 : ConvergenceVerdict::ConvergesEvidence;

  const Rational probe_limit = input.threshold * report.uniform_bound;
  auto run_probe = [&](std::string name, const Vector& f) {
    ProbeTranscript t{std::move(name), {}, true};
    for (const auto* s : stages) {
      const Rational norm = image_norm(*s, f, input.field);
      t.norms.emplace_back(s->index, norm);
      if (s->index >= input.tail_index && !(norm < probe_limit)) t.within_threshold = false;
    }
    report.probes.push_back(std::move(t));
  };
  for (const auto j : column_set) run_probe("delta_" + std::to_string(j), Vector{{j, input.field.one()}});

  std::set<std::uint64_t> columns;
  for (const auto* s : stages)
    for (const auto& [ij, a] : s->entries) columns.insert(ij.second);
  Vector decay;
  for (const auto j : columns) {
    const auto half = static_cast<std::int64_t>((j + 1) / 2);
    decay.emplace(j, PadicScalar::from_parts(input.field.p, half, 1, input.field.precision));
  }
  run_probe("decay", decay);

  report.probes_converge =
      std::all_of(report.probes.begin(), report.probes.end(), [](const auto& t) { return t.within_threshold; });
  report.probes_agree = report.probes_converge == (report.verdict == ConvergenceVerdict::ConvergesEvidence);
  return report;
}

std::vector<std::string> convergence_scenarios() { return {"scalar-decay", "column-shift", "unbounded-growth"}; }

ConvergenceInput convergence_scenario(const std::string& name) {
  constexpr std::uint64_t kStages = 13;
  ConvergenceInput input;
  input.field = PadicField{5, PadicScalar::kDefaultPrecision};
  input.threshold = Rational(1, 5);
  const auto& field = input.field;

  if (name == "scalar-decay") {
    // A^(l) = 5^l U_g on S_3 with g the first non-identity element.
    const auto s3 = groups::symmetric(3);
    const FiniteGroup::element_type g = 1;
    for (std::uint64_t l = 0; l < kStages; ++l) {
      ConvergenceStage stage{l, {}, 1};
      const auto scale = PadicScalar::from_parts(field.p, static_cast<std::int64_t>(l), 1, field.precision);
      for (FiniteGroup::element_type a = 0; a < s3->order(); ++a) stage.entries.emplace(std::pair{a, s3->multiply(a, g)}, scale);
      input.stages.push_back(std::move(stage));
    }
    for (std::uint64_t j = 0; j < s3->order(); ++j) input.column_set.push_back(j);
    input.tail_index = 2;
  } else if (name == "column-shift" || name == "unbounded-growth") {
    const bool grow = name == "unbounded-growth";
    for (std::uint64_t l = 0; l < kStages; ++l) {
      ConvergenceStage stage{l, {}, 1};
      const std::int64_t v = grow ? -static_cast<std::int64_t>(l) : 0;
      stage.entries.emplace(std::pair<std::uint64_t, std::uint64_t>{0, l},
                            PadicScalar::from_parts(field.p, v, 1, field.precision));
      input.stages.push_back(std::move(stage));
    }
    input.column_set = {0, 1, 2, 3, 4};
    input.tail_index = 8;
  } else {
    fail(ErrorKind::InvalidArgument, "unknown convergence scenario '" + name + "'");
  }
  return input;
}

}  // namespace uga
