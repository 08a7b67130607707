#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "uga/errors.hpp"
#include "uga/groups/finite_group.hpp"
#include "uga/scalars/padic.hpp"

namespace uga {

/// Square matrix (a_{i,j}) of an operator on c_0(J, K) for a finite index set
/// J. When built from a group, rows and columns are indexed by its element ids.
template <class Domain>
class OperatorMatrix {
 public:
  using value_type = typename Domain::value_type;

  OperatorMatrix(Domain domain, std::size_t n, FiniteGroupPtr group = nullptr)
      : domain_(std::move(domain)), n_(n), group_(std::move(group)), entries_(n * n, domain_.zero()) {
    if (group_ && group_->order() != n) fail(ErrorKind::DimensionMismatch, "matrix size differs from group order");
  }

  static OperatorMatrix identity(Domain domain, std::size_t n, FiniteGroupPtr group = nullptr) {
    OperatorMatrix m(std::move(domain), n, std::move(group));
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.domain_.one());
    return m;
  }

  const Domain& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return n_; }
  const FiniteGroupPtr& group() const noexcept { return group_; }

  const value_type& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, value_type v) { entries_[i * n_ + j] = std::move(v); }

  OperatorMatrix scaled(const value_type& c) const {
    OperatorMatrix out = *this;
    for (auto& x : out.entries_) x = c * x;
    return out;
  }

  /// (A x)_i = sum_j a_{i,j} x_j.
  std::vector<value_type> apply(const std::vector<value_type>& x) const {
    if (x.size() != n_) fail(ErrorKind::DimensionMismatch, "vector length differs from matrix size");
    std::vector<value_type> y(n_, domain_.zero());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!domain_.is_zero(at(i, j)) && !domain_.is_zero(x[j])) y[i] = y[i] + at(i, j) * x[j];
    return y;
  }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_compatible(b);
    OperatorMatrix out(a.domain_, a.n_, a.group_);
    const auto n = a.n_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& aik = a.at(i, k);
        if (a.domain_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const auto& bkj = b.at(k, j);
          if (b.domain_.is_zero(bkj)) continue;
          out.entries_[i * n + j] = out.entries_[i * n + j] + aik * bkj;
        }
      }
    return out;
  }

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_compatible(b);
    OperatorMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
  }

  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_compatible(b);
    OperatorMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
  }

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (!(a.entries_[i] == b.entries_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (!domain_.is_zero(x)) return false;
    return true;
  }

 private:
  void check_compatible(const OperatorMatrix& b) const {
    if (n_ != b.n_) fail(ErrorKind::DimensionMismatch, "matrices of different sizes");
    if (group_ && b.group_ && !(group_->name() == b.group_->name()))
      fail(ErrorKind::GroupMismatch, "matrices indexed by different groups");
  }

  Domain domain_;
  std::size_t n_;
  FiniteGroupPtr group_;
  std::vector<value_type> entries_;
};

/// ||A|| = sup |a_{i,j}|.
inline Rational op_norm(const OperatorMatrix<PadicField>& a) {
  Rational best = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) best = std::max(best, a.at(i, j).norm());
  return best;
}

}  // namespace uga
