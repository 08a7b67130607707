#pragma once

#include <cstddef>
#include <vector>

#include "uga/groups/family.hpp"

namespace uga {

/// Conjugacy class of an element of an infinite family, explored by BFS.
struct ConjugacyOrbit {
  FamilyElement base;
  /// True when the orbit closed under conjugation by every generator and its
  /// inverse; `elements` is then the whole conjugacy class.
  bool finite = false;
  /// Sorted. The full class when finite, otherwise the explored part.
  std::vector<FamilyElement> elements;
  /// Certified lower bound on the class size when not finite: the cap when
  /// the cap was exceeded, else the number of distinct elements reached
  /// before the length cap stopped the search.
  std::size_t at_least = 0;
  /// Elements whose neighbours were expanded.
  std::size_t visited = 0;
  /// Some conjugate was dropped for exceeding the length cap.
  bool length_capped = false;
};

inline constexpr std::size_t kDefaultLengthCap = 40;

/// Orbit of `a` under conjugation by the family's generators and their
/// inverses. Since the generators generate the group, this orbit is exactly
/// the conjugacy class {c^-1 a c}, so a closed orbit is an exact answer.
/// Returns finite only when closure is reached with at most `cap` elements.
ConjugacyOrbit conjugacy_orbit(const GroupFamily& family, const FamilyElement& a, std::size_t cap,
                               std::size_t length_cap = kDefaultLengthCap);

struct IccVerdict {
  FamilyElement probe;
  /// The class has more than `bound` elements (or at least `bound` when the
  /// length cap cut the search); false means `class_size` is exact.
  bool certified_at_least = false;
  std::size_t bound = 0;
  std::size_t class_size = 0;
  ConjugacyOrbit orbit;
};

/// Per-probe orbit status. Any finite class of a non-identity element shows
/// the operator algebra is not a factor; all-certified is only evidence.
std::vector<IccVerdict> icc_check(const GroupFamily& family, const std::vector<FamilyElement>& probes,
                                  std::size_t cap, std::size_t length_cap = kDefaultLengthCap);

}  // namespace uga
