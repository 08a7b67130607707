#include "uga/group_algebra/reduction.hpp"

#include <set>

#include "uga/linalg.hpp"

namespace uga {

std::vector<FqGroupAlgebra> center_class_sums(const FiniteGroupPtr& group, const FqField& field) {
  std::vector<FqGroupAlgebra> sums;
  for (const auto& cls : groups::conjugacy_classes(*group)) {
    FqGroupAlgebra x(group, field);
    for (auto g : cls) x.set(g, field.one());
    sums.push_back(std::move(x));
  }
  return sums;
}

namespace {

template <class Group>
OrthonormalityResult orthonormality_impl(const std::vector<GroupAlgebraElement<Group, PadicField>>& vectors) {
  if (vectors.empty()) return {true, 0};
  std::set<typename Group::element_type> support;
  for (const auto& v : vectors) {
    if (sup_norm(v) != 1)
      fail(ErrorKind::InvalidArgument, "orthonormality test needs vectors of norm exactly 1");
    for (const auto& [g, c] : v.coeffs()) support.insert(g);
  }
  const std::vector<typename Group::element_type> columns(support.begin(), support.end());
  const auto residue = FqField::prime(vectors.front().domain().p);
  linalg::Rows<FqField::code_type> rows;
  for (const auto& v : vectors) {
    const auto r = reduce(v);
    linalg::Row<FqField::code_type> row;
    for (const auto& g : columns) row.push_back(r.coefficient(g).code());
    rows.push_back(std::move(row));
  }
  const auto rank = linalg::rank(linalg::FqOps{residue}, columns.size(), rows);
  return {rank == vectors.size(), rank};
}

}  // namespace

OrthonormalityResult orthonormality_test(const std::vector<PadicGroupAlgebra>& vectors) {
  return orthonormality_impl(vectors);
}

OrthonormalityResult orthonormality_test(
    const std::vector<GroupAlgebraElement<GroupFamily, PadicField>>& vectors) {
  return orthonormality_impl(vectors);
}

}  // namespace uga
