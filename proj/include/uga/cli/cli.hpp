#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "uga/baer/algebra.hpp"
#include "uga/groups/family.hpp"
#include "uga/groups/finite_group.hpp"
#include "uga/operators/convergence.hpp"

namespace uga::cli {

using nlohmann::json;

/// {"type":"symmetric","n":3}, cyclic, dihedral (n = polygon size), trivial,
/// quaternion, {"type":"product","factors":[...]},
/// {"type":"permutations","degree":4,"generators":["(1 2)","(1 2 3 4)"]}.
FiniteGroupPtr parse_group_spec(const json& spec);

/// {"type":"free","rank":2}, free_abelian, infinite_dihedral, finsupp.
GroupFamily parse_family_spec(const json& spec);

/// {"field":{"p":5,"k":1},"dim":n,"table":[[i,j,k,c],...],"unit":[...]}.
StructureAlgebra parse_algebra_spec(const json& spec);

/// {"p":5,"column_set":[...],"tail_index":8,"threshold":"1/5",
///  "stages":[{"index":0,"bound":"1","entries":[[0,3,"1/25"],...]}]}.
ConvergenceInput parse_stages(const json& spec);

struct BudgetOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::optional<std::size_t> samples;
};

/// Each command returns a report envelope; errors propagate as exceptions.
json cmd_analyze_group(const json& group, std::uint32_t p, unsigned k, const BudgetOptions& options);
json cmd_factor_check(const json& family, const std::vector<std::string>& probes, std::size_t cap,
                      std::size_t length_cap);
json cmd_convergence(const std::optional<std::string>& scenario, const std::optional<json>& stages);
/// Exactly one of group (with p, k) or algebra is used.
json cmd_wedderburn(const std::optional<json>& group, const std::optional<json>& algebra, std::uint32_t p, unsigned k,
                    bool require_split);
json cmd_baer(const std::optional<json>& group, const std::optional<json>& algebra, std::uint32_t p, unsigned k,
              const BudgetOptions& options);

/// Full command line: writes the report to `out`, diagnostics to `err`, and
/// returns the exit code (0 success, 1 invalid input, 2 budget exceeded).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uga::cli
