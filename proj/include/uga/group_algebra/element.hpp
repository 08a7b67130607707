#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "uga/errors.hpp"
#include "uga/groups/family.hpp"
#include "uga/groups/finite_group.hpp"
#include "uga/scalars/fq.hpp"
#include "uga/scalars/padic.hpp"

namespace uga {

inline bool same_domain(const FqField& a, const FqField& b) { return a == b; }
inline bool same_domain(const PadicField& a, const PadicField& b) { return a.p == b.p; }
inline bool same_domain(const RationalField&, const RationalField&) { return true; }

inline bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return &a == &b || (a.name() == b.name() && a.order() == b.order());
}
inline bool same_group(const GroupFamily& a, const GroupFamily& b) {
  return a.kind() == b.kind() && a.rank() == b.rank();
}

/// A finitely supported map G -> scalars.
///
/// The same value serves as a vector of c_0(G, K) (sup-norm, orthonormal
/// basis of point masses) and as an element of the group algebra under the
/// convolution (x * y)_d = sum_l x_l y_{l^-1 d}. Zero coefficients are never
/// stored and iteration follows the group's element order.
template <class Group, class Domain>
class GroupAlgebraElement {
 public:
  using group_type = Group;
  using domain_type = Domain;
  using element_type = typename Group::element_type;
  using scalar_type = typename Domain::value_type;
  using coeff_map = std::map<element_type, scalar_type>;

  GroupAlgebraElement(std::shared_ptr<const Group> group, Domain domain)
      : group_(std::move(group)), domain_(std::move(domain)) {}

  static GroupAlgebraElement delta(std::shared_ptr<const Group> group, Domain domain, const element_type& g) {
    GroupAlgebraElement x(std::move(group), std::move(domain));
    x.set(g, x.domain_.one());
    return x;
  }
  static GroupAlgebraElement unit(std::shared_ptr<const Group> group, Domain domain) {
    const auto e = group->identity();
    return delta(std::move(group), std::move(domain), e);
  }

  const Group& group() const noexcept { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }
  const Domain& domain() const noexcept { return domain_; }
  const coeff_map& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  scalar_type coefficient(const element_type& g) const {
    const auto it = coeffs_.find(g);
    return it == coeffs_.end() ? domain_.zero() : it->second;
  }

  void set(const element_type& g, scalar_type c) {
    check_member(g);
    if (domain_.is_zero(c))
      coeffs_.erase(g);
    else
      coeffs_.insert_or_assign(g, std::move(c));
  }

  void add_to(const element_type& g, const scalar_type& c) { set(g, coefficient(g) + c); }

  GroupAlgebraElement scaled(const scalar_type& c) const {
    GroupAlgebraElement out(group_, domain_);
    for (const auto& [g, x] : coeffs_) out.set(g, c * x);
    return out;
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    x.check_compatible(y);
    GroupAlgebraElement out = x;
    for (const auto& [g, c] : y.coeffs_) out.add_to(g, c);
    return out;
  }

  friend GroupAlgebraElement operator-(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    x.check_compatible(y);
    GroupAlgebraElement out = x;
    for (const auto& [g, c] : y.coeffs_) out.set(g, out.coefficient(g) - c);
    return out;
  }

  /// Convolution: (x * y)_d = sum over l of x_l y_{l^-1 d}.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    x.check_compatible(y);
    GroupAlgebraElement out(x.group_, x.domain_);
    std::map<element_type, scalar_type> acc;
    for (const auto& [l, a] : x.coeffs_)
      for (const auto& [m, b] : y.coeffs_) {
        const auto d = x.group_->multiply(l, m);
        const auto it = acc.find(d);
        if (it == acc.end())
          acc.emplace(d, a * b);
        else
          it->second = it->second + a * b;
      }
    for (auto& [d, c] : acc) out.set(d, std::move(c));
    return out;
  }

  friend bool operator==(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    if (!same_group(*x.group_, *y.group_) || !same_domain(x.domain_, y.domain_)) return false;
    if (x.coeffs_.size() != y.coeffs_.size()) return false;
    for (const auto& [g, c] : x.coeffs_) {
      const auto it = y.coeffs_.find(g);
      if (it == y.coeffs_.end() || !(it->second == c)) return false;
    }
    return true;
  }

 private:
  void check_member(const element_type& g) const {
    if constexpr (std::is_same_v<Group, FiniteGroup>) {
      if (!group_->contains(g)) fail(ErrorKind::InvalidArgument, "element outside " + group_->name());
    } else {
      group_->validate(g);
    }
  }

  void check_compatible(const GroupAlgebraElement& y) const {
    if (!same_group(*group_, *y.group_))
      fail(ErrorKind::GroupMismatch, "group algebra elements over different groups");
    if (!same_domain(domain_, y.domain_))
      fail(ErrorKind::FieldMismatch, "group algebra elements over different scalars");
  }

  std::shared_ptr<const Group> group_;
  Domain domain_;
  coeff_map coeffs_;
};

using FqGroupAlgebra = GroupAlgebraElement<FiniteGroup, FqField>;
using PadicGroupAlgebra = GroupAlgebraElement<FiniteGroup, PadicField>;

}  // namespace uga
