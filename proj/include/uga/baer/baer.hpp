#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uga/baer/algebra.hpp"

namespace uga {

struct LatticeOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  /// When set and the algebra is over budget, annihilators of this many
  /// pseudo-random elements are used instead and verdicts become "sampled".
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
};

struct AnnihilatorLattice {
  /// Sorted: larger dimension first, then by RREF rows.
  std::vector<Subspace> members;
  bool exhaustive = true;
  std::uint64_t elements_scanned = 0;
};

/// All left annihilators: l.ann(x) for every x, closed under intersection.
/// l.ann(cx) = l.ann(x) for nonzero scalars c, so only elements whose first
/// nonzero coordinate is 1 are solved for.
AnnihilatorLattice annihilator_lattice(const StructureAlgebra& a, const LatticeOptions& options = {});

/// Some idempotent e in L with L = A e, or nullopt. Raises NotLeftIdeal.
std::optional<AlgebraVector> idempotent_generator(const StructureAlgebra& a, const Subspace& l);

struct BaerVerdict {
  bool is_baer = true;
  /// First lattice member with no idempotent generator.
  std::optional<Subspace> witness;
  bool exhaustive = true;
  std::size_t lattice_size = 0;
};

BaerVerdict is_baer(const StructureAlgebra& a, const LatticeOptions& options = {});

struct IdempotentInfo {
  AlgebraVector element;
  bool is_central = false;
  /// Every idempotent of the corner eAe is central in eAe.
  bool is_abelian = false;
  /// xy = e implies yx = e inside eAe.
  bool is_finite = false;
  /// True when is_finite came from a scan of all pairs in the corner; otherwise
  /// it rests on the corner being finite-dimensional.
  bool finite_checked_exhaustively = false;
  AlgebraVector central_support;
  bool is_faithful = false;
};

/// Corners up to this many elements get the exhaustive xy = e scan.
inline constexpr std::uint64_t kDedekindScanLimit = 1u << 14;

/// All idempotents in lexicographic coordinate order, annotated.
std::vector<IdempotentInfo> enumerate_idempotents(const StructureAlgebra& a, std::uint64_t budget);

enum class KaplanskyType { I, II, III };

const char* to_string(KaplanskyType type);

struct BaerReport {
  BaerVerdict baer;
  KaplanskyType type = KaplanskyType::I;
  /// 1 is Dedekind finite.
  bool finite = true;
  /// Faithful Abelian idempotent (type I) or faithful finite idempotent (type II).
  std::optional<AlgebraVector> certificate;
  std::size_t idempotent_count = 0;
};

/// Raises NotBaer when the lattice has an annihilator without idempotent generator.
BaerReport kaplansky_type(const StructureAlgebra& a, const LatticeOptions& options = {});
/// Same, reusing an is_baer verdict.
BaerReport kaplansky_type(const StructureAlgebra& a, const BaerVerdict& baer, std::uint64_t budget);

}  // namespace uga
