#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uga {

/// Normal form of an element of an infinite group family.
///
///   free            reduced word, letters +-1..+-rank (negative = inverse)
///   free_abelian    exponent vector of length rank
///   infinite dihedral  {k, e} for r^k s^e, e in {0, 1}
///   finsupp         images of 0..m-1, m = 1 + largest moved point
///
/// Ordering is by length first, then lexicographic.
struct FamilyElement {
  std::vector<std::int64_t> code;

  friend bool operator==(const FamilyElement&, const FamilyElement&) = default;
  friend std::strong_ordering operator<=>(const FamilyElement& a, const FamilyElement& b) {
    if (a.code.size() != b.code.size()) return a.code.size() <=> b.code.size();
    return a.code <=> b.code;
  }
};

enum class FamilyKind { Free, FreeAbelian, InfiniteDihedral, FinSuppPermutations };

/// A finitely generated (or, for finsupp, generator-truncated) infinite group
/// with computable normal forms.
class GroupFamily {
 public:
  using element_type = FamilyElement;

  /// Points moved by a finsupp permutation lie below this bound.
  static constexpr std::int64_t kSupportBound = 64;

  static GroupFamily free(unsigned rank);
  static GroupFamily free_abelian(unsigned rank);
  static GroupFamily infinite_dihedral();
  static GroupFamily finsupp_permutations();

  FamilyKind kind() const noexcept { return kind_; }
  unsigned rank() const noexcept { return rank_; }
  std::string name() const;

  /// Families whose ICC property is known by a hand proof: free groups of
  /// rank >= 2 and finitary permutations of N.
  bool has_icc_proof() const noexcept;

  FamilyElement identity() const;
  bool is_identity(const FamilyElement& a) const { return a == identity(); }
  FamilyElement multiply(const FamilyElement& a, const FamilyElement& b) const;
  FamilyElement inverse(const FamilyElement& a) const;
  FamilyElement conjugate(const FamilyElement& a, const FamilyElement& by) const {
    return multiply(multiply(inverse(by), a), by);
  }

  /// Generating set used for orbit exploration. For finsupp these are the
  /// adjacent transpositions (i i+1) with i + 1 < kSupportBound.
  std::vector<FamilyElement> generators() const;

  /// Word length, l1 norm, |k| + e, or 1 + largest moved point.
  std::size_t size(const FamilyElement& a) const;

  /// Raises InvalidArgument if `a` is not a valid normal form.
  void validate(const FamilyElement& a) const;

  FamilyElement parse(const std::string& text) const;
  std::string format(const FamilyElement& a) const;

 private:
  GroupFamily(FamilyKind kind, unsigned rank) : kind_(kind), rank_(rank) {}

  FamilyKind kind_;
  unsigned rank_;
};

}  // namespace uga
