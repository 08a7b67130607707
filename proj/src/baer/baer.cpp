#include "uga/baer/baer.hpp"

#include <random>
#include <set>

#include "uga/errors.hpp"

namespace uga {

namespace {

bool is_normalized(const AlgebraVector& x) {
  for (auto c : x)
    if (c != 0) return c == 1;
  return false;
}

// Every combination of the basis rows of s, in lexicographic coefficient order.
template <class F>
void for_each_in_span(const StructureAlgebra& a, const Subspace& s, F&& f) {
  const auto q = static_cast<FqField::code_type>(a.field().order());
  std::vector<FqField::code_type> coeffs(s.dim(), 0);
  while (true) {
    AlgebraVector x = a.zero();
    for (std::size_t r = 0; r < coeffs.size(); ++r)
      if (coeffs[r] != 0) x = a.add(x, a.scale(coeffs[r], s.basis()[r]));
    f(static_cast<const AlgebraVector&>(x));
    std::size_t c = coeffs.size();
    while (c > 0) {
      if (++coeffs[c - 1] < q) break;
      coeffs[c - 1] = 0;
      --c;
    }
    if (c == 0) return;
  }
}

std::uint64_t span_size(const StructureAlgebra& a, const Subspace& s) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (total > (std::uint64_t{1} << 62) / a.field().order()) return ~std::uint64_t{0};
    total *= a.field().order();
  }
  return total;
}

// Coefficients y with sum_r y_r (x b_r) = target, for b the basis of s.
std::optional<std::vector<FqField::code_type>> solve_left_multiple(const StructureAlgebra& a, const Subspace& s,
                                                                   const AlgebraVector& x, const AlgebraVector& target,
                                                                   std::vector<AlgebraVector>* kernel) {
  const auto n = a.dim(), m = s.dim();
  linalg::Rows<FqField::code_type> eqs(n, linalg::Row<FqField::code_type>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    const auto prod = a.multiply(x, s.basis()[r]);
    for (std::size_t k = 0; k < n; ++k) eqs[k][r] = prod[k];
  }
  const linalg::FqOps ops{a.field()};
  if (kernel) {
    kernel->clear();
    for (const auto& c : linalg::nullspace(ops, m, eqs)) {
      AlgebraVector y = a.zero();
      for (std::size_t r = 0; r < m; ++r) y = a.add(y, a.scale(c[r], s.basis()[r]));
      kernel->push_back(std::move(y));
    }
  }
  return linalg::solve(ops, m, eqs, target);
}

AlgebraVector combine(const StructureAlgebra& a, const Subspace& s, const std::vector<FqField::code_type>& c) {
  AlgebraVector y = a.zero();
  for (std::size_t r = 0; r < c.size(); ++r)
    if (c[r] != 0) y = a.add(y, a.scale(c[r], s.basis()[r]));
  return y;
}

}  // namespace

AnnihilatorLattice annihilator_lattice(const StructureAlgebra& a, const LatticeOptions& options) {
  AnnihilatorLattice out;
  std::set<Subspace> members;
  members.insert(Subspace::full(a.field(), a.dim()));
  const auto count = a.element_count();
  if (count && *count <= options.budget) {
    for_each_element(a, options.budget, [&](const AlgebraVector& x) {
      ++out.elements_scanned;
      if (is_normalized(x)) members.insert(left_annihilator(a, {x}));
    });
  } else if (options.samples) {
    out.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    const auto q = a.field().order();
    for (std::size_t i = 0; i < *options.samples; ++i) {
      AlgebraVector x(a.dim());
      for (auto& c : x) c = static_cast<FqField::code_type>(rng() % q);
      ++out.elements_scanned;
      members.insert(left_annihilator(a, {x}));
    }
  } else {
    require_enumerable(a, options.budget);
  }

  std::vector<Subspace> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<Subspace> fresh;
    const std::vector<Subspace> current(members.begin(), members.end());
    for (const auto& x : frontier)
      for (const auto& y : current) {
        auto z = x.intersect(y);
        if (members.insert(z).second) fresh.push_back(std::move(z));
      }
    frontier = std::move(fresh);
  }
  out.members.assign(members.begin(), members.end());
  return out;
}

std::optional<AlgebraVector> idempotent_generator(const StructureAlgebra& a, const Subspace& l) {
  if (l.ambient() != a.dim()) fail(ErrorKind::DimensionMismatch, "subspace outside the algebra");
  if (!is_left_ideal(a, l)) fail(ErrorKind::NotLeftIdeal, "subspace is not a left ideal");
  const auto n = a.dim(), m = l.dim();
  if (m == 0) return a.zero();
  // e = sum_r c_r l_r with l_s e = l_s for every basis vector l_s.
  linalg::Rows<FqField::code_type> eqs;
  linalg::Row<FqField::code_type> rhs;
  for (const auto& ls : l.basis()) {
    linalg::Rows<FqField::code_type> block(n, linalg::Row<FqField::code_type>(m, 0));
    for (std::size_t r = 0; r < m; ++r) {
      const auto prod = a.multiply(ls, l.basis()[r]);
      for (std::size_t k = 0; k < n; ++k) block[k][r] = prod[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      eqs.push_back(std::move(block[k]));
      rhs.push_back(ls[k]);
    }
  }
  const auto c = linalg::solve(linalg::FqOps{a.field()}, m, eqs, rhs);
  if (!c) return std::nullopt;
  return combine(a, l, *c);
}

BaerVerdict is_baer(const StructureAlgebra& a, const LatticeOptions& options) {
  const auto lattice = annihilator_lattice(a, options);
  BaerVerdict v;
  v.exhaustive = lattice.exhaustive;
  v.lattice_size = lattice.members.size();
  for (const auto& l : lattice.members)
    if (!idempotent_generator(a, l)) {
      v.is_baer = false;
      v.witness = l;
      break;
    }
  return v;
}

const char* to_string(KaplanskyType type) {
  switch (type) {
    case KaplanskyType::I: return "I";
    case KaplanskyType::II: return "II";
    case KaplanskyType::III: return "III";
  }
  return "?";
}

std::vector<IdempotentInfo> enumerate_idempotents(const StructureAlgebra& a, std::uint64_t budget) {
  std::vector<IdempotentInfo> out;
  for_each_element(a, budget, [&](const AlgebraVector& x) {
    if (a.multiply(x, x) != x) return;
    IdempotentInfo info;
    info.element = x;
    out.push_back(std::move(info));
  });
  std::vector<const AlgebraVector*> central;
  for (auto& info : out) {
    info.is_central = a.is_central(info.element);
    if (info.is_central) central.push_back(&info.element);
  }

  for (auto& info : out) {
    const auto& e = info.element;
    std::vector<AlgebraVector> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.multiply(a.multiply(e, a.basis(i)), e));
    const Subspace corner(a.field(), a.dim(), rows);

    info.is_abelian = true;
    for (const auto& other : out) {
      const auto& f = other.element;
      if (a.multiply(e, f) != f || a.multiply(f, e) != f) continue;
      for (const auto& b : corner.basis())
        if (a.multiply(f, b) != a.multiply(b, f)) {
          info.is_abelian = false;
          break;
        }
      if (!info.is_abelian) break;
    }

    // xy = e in eAe: the solutions form y0 + K; yx = e must hold on all of them.
    info.is_finite = true;
    if (span_size(a, corner) <= kDedekindScanLimit) {
      info.finite_checked_exhaustively = true;
      std::vector<AlgebraVector> kernel;
      for_each_in_span(a, corner, [&](const AlgebraVector& x) {
        if (!info.is_finite) return;
        const auto y0 = solve_left_multiple(a, corner, x, e, &kernel);
        if (!y0) return;
        if (a.multiply(combine(a, corner, *y0), x) != e) info.is_finite = false;
        for (const auto& k : kernel)
          if (!StructureAlgebra::is_zero(a.multiply(k, x))) info.is_finite = false;
      });
    }

    // Smallest central v with v e = e, under u <= v iff v u = u.
    std::vector<const AlgebraVector*> above;
    for (const auto* v : central)
      if (a.multiply(*v, e) == e) above.push_back(v);
    for (const auto* v : above) {
      bool smallest = true;
      for (const auto* w : above)
        if (a.multiply(*w, *v) != *v) {
          smallest = false;
          break;
        }
      if (smallest) {
        info.central_support = *v;
        break;
      }
    }
    info.is_faithful = info.central_support == a.unit();
  }
  return out;
}

BaerReport kaplansky_type(const StructureAlgebra& a, const LatticeOptions& options) {
  return kaplansky_type(a, is_baer(a, options), options.budget);
}

BaerReport kaplansky_type(const StructureAlgebra& a, const BaerVerdict& baer, std::uint64_t budget) {
  BaerReport report;
  report.baer = baer;
  if (!report.baer.is_baer) fail(ErrorKind::NotBaer, a.name() + " is not a Baer ring");
  const auto idempotents = enumerate_idempotents(a, budget);
  report.idempotent_count = idempotents.size();
  bool nonzero_abelian = false, nonzero_finite = false;
  const IdempotentInfo* faithful_abelian = nullptr;
  const IdempotentInfo* faithful_finite = nullptr;
  for (const auto& info : idempotents) {
    if (info.element == a.unit()) report.finite = info.is_finite;
    if (StructureAlgebra::is_zero(info.element)) continue;
    nonzero_abelian = nonzero_abelian || info.is_abelian;
    nonzero_finite = nonzero_finite || info.is_finite;
    if (info.is_faithful && info.is_abelian && !faithful_abelian) faithful_abelian = &info;
    if (info.is_faithful && info.is_finite && !faithful_finite) faithful_finite = &info;
  }
  if (faithful_abelian) {
    report.type = KaplanskyType::I;
    report.certificate = faithful_abelian->element;
  } else if (!nonzero_abelian && faithful_finite) {
    report.type = KaplanskyType::II;
    report.certificate = faithful_finite->element;
  } else if (!nonzero_finite) {
    report.type = KaplanskyType::III;
  } else {
    fail(ErrorKind::InvalidArgument, a.name() + " mixes types and has no single Kaplansky type");
  }
  return report;
}

}  // namespace uga
