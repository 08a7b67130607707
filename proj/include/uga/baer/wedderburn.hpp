#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uga/baer/algebra.hpp"
#include "uga/baer/baer.hpp"
#include "uga/groups/finite_group.hpp"

namespace uga {

/// Orthogonal central idempotents summing to 1, primitive among central
/// idempotents. They are the primitive idempotents of the split subalgebra
/// {z in Z(A) : z^q = z}, found by factoring minimal polynomials.
/// Raises NotSemisimple when the center has nonzero nilpotents.
std::vector<AlgebraVector> primitive_central_idempotents(const StructureAlgebra& a);

struct WedderburnComponent {
  /// Matrix size n_i.
  std::size_t matrix_size;
  /// Degree d_i of the component's center over F_q.
  std::size_t degree;
  AlgebraVector idempotent;
};

struct WedderburnReport {
  /// Sorted by (n_i, d_i), then by idempotent coordinates.
  std::vector<WedderburnComponent> components;
  std::size_t dimension;
};

/// With require_split, raises NeedsFieldExtension (carrying the largest d_i)
/// when some component is not a matrix algebra over F_q itself.
WedderburnReport wedderburn_components(const StructureAlgebra& a, bool require_split = false);

struct NilpotentIdeal {
  Subspace ideal;
  /// Smallest k with I^k = 0.
  std::size_t index;
};

/// Sum of the nilpotent ideals A x A over all x with x^dim = 0. This is the
/// radical, since the radical is nilpotent and contains every such ideal.
/// nullopt when it is zero.
std::optional<NilpotentIdeal> nilpotent_ideal_bruteforce(const StructureAlgebra& a, std::uint64_t budget);

/// Nilpotency index of a two-sided ideal, or nullopt when I^k never vanishes.
std::optional<std::size_t> nilpotency_index(const StructureAlgebra& a, const Subspace& ideal);

bool maschke_predict(const FiniteGroup& group, std::uint32_t p);

struct GroupPipelineReport {
  std::string algebra;
  std::size_t group_order;
  std::uint32_t p;
  unsigned k;
  std::size_t class_count;
  std::size_t center_dimension;
  bool maschke_semisimple;
  /// Exact brute-force radical; matches the Maschke prediction when present.
  std::optional<NilpotentIdeal> radical;
  bool semisimple;
  std::optional<WedderburnReport> wedderburn;
  BaerVerdict baer;
  /// Present when the algebra is Baer and idempotents could be enumerated.
  std::optional<BaerReport> kaplansky;
  std::string verdict;
};

GroupPipelineReport group_baer_pipeline(const FiniteGroupPtr& group, std::uint32_t p, unsigned k,
                                        const LatticeOptions& options = {});

}  // namespace uga
