#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uga {

/// A finite group given by its Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  using element_type = std::uint32_t;

  static constexpr std::size_t kMaxOrder = 5040;
  /// Above this order associativity is checked on a deterministic sample.
  static constexpr std::size_t kExhaustiveAssociativityOrder = 64;

  /// Validates the table (Latin square, identity 0, associativity).
  FiniteGroup(std::string name, std::vector<element_type> table, std::vector<std::string> labels);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  element_type identity() const noexcept { return 0; }
  element_type multiply(element_type a, element_type b) const { return table_[a * order_ + b]; }
  element_type inverse(element_type a) const { return inverse_[a]; }
  element_type conjugate(element_type a, element_type by) const {
    return multiply(multiply(inverse(by), a), by);
  }
  bool contains(element_type a) const noexcept { return a < order_; }

  const std::string& label(element_type a) const { return labels_.at(a); }
  std::optional<element_type> find(const std::string& label) const;
  /// Like find(), but raises InvalidArgument for unknown labels.
  element_type parse(const std::string& label) const;

  bool is_abelian() const;
  std::size_t element_order(element_type a) const;
  std::size_t exponent() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<element_type> table_;
  std::vector<element_type> inverse_;
  std::vector<std::string> labels_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

/// Permutations act on the right: (g h)(x) = h(g(x)). Points are 0-based
/// internally; cycle strings use 1-based points, e.g. "(1 2 3)(4 5)".
using Permutation = std::vector<std::uint32_t>;

Permutation parse_cycles(const std::string& text, std::size_t degree, unsigned first_point = 1);
std::string format_cycles(const Permutation& perm, unsigned first_point = 1);

namespace groups {

FiniteGroupPtr trivial();
FiniteGroupPtr cyclic(std::size_t n);
/// Symmetries of a regular n-gon, order 2n.
FiniteGroupPtr dihedral(std::size_t n);
FiniteGroupPtr symmetric(std::size_t n);
FiniteGroupPtr quaternion();
FiniteGroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Closure of the generators in Sym(degree); fails beyond kMaxOrder elements.
FiniteGroupPtr from_permutations(std::size_t degree, const std::vector<Permutation>& generators);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<FiniteGroup::element_type>> conjugacy_classes(const FiniteGroup& g);
std::vector<FiniteGroup::element_type> center(const FiniteGroup& g);

}  // namespace groups
}  // namespace uga
