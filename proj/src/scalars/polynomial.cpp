#include "uga/scalars/polynomial.hpp"

#include <algorithm>
#include <map>

#include "uga/errors.hpp"
#include "uga/linalg.hpp"

namespace uga {
namespace {

void check_same_field(const FqPolynomial& a, const FqPolynomial& b) {
  if (!(a.field() == b.field()))
    fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

}  // namespace

FqPolynomial::FqPolynomial(FqField field, std::vector<code_type> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c >= field_.order()) fail(ErrorKind::InvalidArgument, "coefficient code out of range");
  normalize();
}

FqPolynomial::FqPolynomial(FqField field, const std::vector<FqElement>& coeffs)
    : field_(std::move(field)) {
  coeffs_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!(c.field() == field_)) fail(ErrorKind::FieldMismatch, "coefficient from another field");
    coeffs_.push_back(c.code());
  }
  normalize();
}

FqPolynomial FqPolynomial::monomial(const FqField& field, std::size_t degree, code_type coeff) {
  std::vector<code_type> c(degree + 1, 0);
  c[degree] = coeff;
  return {field, std::move(c)};
}

FqPolynomial FqPolynomial::constant(const FqField& field, code_type c) { return {field, std::vector<code_type>{c}}; }

FqPolynomial FqPolynomial::linear(const FqField& field, code_type root) {
  return {field, std::vector<code_type>{field.neg(root), 1}};
}

void FqPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FqPolynomial FqPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FqPolynomial FqPolynomial::scaled(code_type c) const {
  std::vector<code_type> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(c, coeffs_[i]);
  return {field_, std::move(out)};
}

FqPolynomial FqPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return FqPolynomial(field_);
  std::vector<code_type> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = field_.mul(field_.code_of_int(static_cast<std::int64_t>(i % field_.characteristic())),
                            coeffs_[i]);
  return {field_, std::move(out)};
}

FqPolynomial::code_type FqPolynomial::evaluate(code_type x) const {
  code_type acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b) {
  check_same_field(a, b);
  std::vector<FqPolynomial::code_type> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.code(i), b.code(i));
  return {a.field_, std::move(out)};
}

FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b) {
  check_same_field(a, b);
  std::vector<FqPolynomial::code_type> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.sub(a.code(i), b.code(i));
  return {a.field_, std::move(out)};
}

FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FqPolynomial(a.field_);
  const auto& f = a.field_;
  std::vector<FqPolynomial::code_type> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return {f, std::move(out)};
}

std::pair<FqPolynomial, FqPolynomial> divmod(const FqPolynomial& a, const FqPolynomial& b) {
  check_same_field(a, b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto& f = a.field();
  std::vector<FqPolynomial::code_type> rem = a.codes();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {FqPolynomial(f), a};
  std::vector<FqPolynomial::code_type> quot(rem.size() - db, 0);
  const auto lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const auto c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.code(j)));
  }
  rem.resize(db);
  return {FqPolynomial(f, std::move(quot)), FqPolynomial(f, std::move(rem))};
}

FqPolynomial operator%(const FqPolynomial& a, const FqPolynomial& b) { return divmod(a, b).second; }
FqPolynomial operator/(const FqPolynomial& a, const FqPolynomial& b) { return divmod(a, b).first; }

bool operator==(const FqPolynomial& a, const FqPolynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const FqPolynomial& a, const FqPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                      b.coeffs_.rend());
}

std::string FqPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    const std::string c = field_.element(coeffs_[i]).to_string();
    if (i == 0 || coeffs_[i] != 1) s += c;
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

FqPolynomial gcd(const FqPolynomial& a, const FqPolynomial& b) {
  FqPolynomial x = a, y = b;
  while (!y.is_zero()) {
    FqPolynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const FqPolynomial& a, const FqPolynomial& b) {
  const auto& f = a.field();
  FqPolynomial r0 = a, r1 = b;
  FqPolynomial s0 = FqPolynomial::constant(f, 1), s1(f);
  FqPolynomial t0(f), t1 = FqPolynomial::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto scale = f.inv(r0.leading());
  return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

FqPolynomial powmod(const FqPolynomial& base, std::uint64_t e, const FqPolynomial& modulus) {
  FqPolynomial result = FqPolynomial::constant(base.field(), 1) % modulus;
  FqPolynomial b = base % modulus;
  while (e > 0) {
    if (e & 1U) result = (result * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1U;
  }
  return result;
}

namespace {

// Replaces every coefficient c of a polynomial in x^p by c^{1/p}.
FqPolynomial pth_root(const FqPolynomial& f) {
  const auto& field = f.field();
  const std::uint32_t p = field.characteristic();
  // c^{1/p} = c^{q/p} in F_q.
  const std::uint64_t root_exp = field.order() / p;
  std::vector<FqPolynomial::code_type> out(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.pow(f.code(i * p), root_exp);
  return {field, std::move(out)};
}

void squarefree_decompose(const FqPolynomial& f, unsigned scale,
                          std::map<FqPolynomial, unsigned>& out) {
  if (f.degree() <= 0) return;
  const auto& field = f.field();
  const FqPolynomial one = FqPolynomial::constant(field, 1);
  const FqPolynomial d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), scale * field.characteristic(), out);
    return;
  }
  FqPolynomial c = gcd(f, d);
  FqPolynomial w = f / c;
  unsigned i = 1;
  while (!(w == one)) {
    FqPolynomial y = gcd(w, c);
    FqPolynomial part = w / y;
    if (part.degree() > 0) out[part.monic()] += i * scale;
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c), scale * field.characteristic(), out);
}

// Berlekamp splitting of a monic squarefree polynomial.
std::vector<FqPolynomial> berlekamp(const FqPolynomial& f) {
  const auto& field = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};
  // Rows of Q are x^{q i} mod f.
  const FqPolynomial xq = powmod(FqPolynomial::monomial(field, 1), field.order(), f);
  std::vector<std::vector<FqField::code_type>> q_rows(n);
  FqPolynomial power = FqPolynomial::constant(field, 1);
  for (std::size_t i = 0; i < n; ++i) {
    q_rows[i].assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) q_rows[i][j] = power.code(j);
    power = (power * xq) % f;
  }
  // v (Q - I) = 0, one equation per column.
  linalg::FqOps ops{field};
  std::vector<std::vector<FqField::code_type>> equations(n, std::vector<FqField::code_type>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      equations[j][i] = i == j ? field.sub(q_rows[i][j], 1) : q_rows[i][j];
  const auto kernel = linalg::nullspace(ops, n, equations);
  const std::size_t factor_count = kernel.size();
  std::vector<FqPolynomial> parts{f};
  if (factor_count == 1) return parts;
  for (const auto& v : kernel) {
    const FqPolynomial vp(field, v);
    if (vp.degree() <= 0) continue;
    for (std::uint64_t c = 0; c < field.order() && parts.size() < factor_count; ++c) {
      const FqPolynomial shifted = vp - FqPolynomial::constant(field, static_cast<FqField::code_type>(c));
      std::vector<FqPolynomial> next;
      for (const auto& h : parts) {
        if (h.degree() <= 1) {
          next.push_back(h);
          continue;
        }
        FqPolynomial g = gcd(h, shifted);
        if (g.degree() > 0 && g.degree() < h.degree()) {
          next.push_back(g);
          next.push_back((h / g).monic());
        } else {
          next.push_back(h);
        }
      }
      parts = std::move(next);
    }
    if (parts.size() == factor_count) break;
  }
  return parts;
}

}  // namespace

std::vector<Factor> factor(const FqPolynomial& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  std::map<FqPolynomial, unsigned> squarefree;
  squarefree_decompose(f.monic(), 1, squarefree);
  std::map<FqPolynomial, unsigned> irreducible;
  for (const auto& [part, mult] : squarefree)
    for (auto& g : berlekamp(part)) irreducible[g.monic()] += mult;
  std::vector<Factor> out;
  out.reserve(irreducible.size());
  for (auto& [poly, mult] : irreducible) out.push_back({poly, mult});
  return out;
}

bool is_irreducible(const FqPolynomial& f) {
  if (f.degree() < 1) return false;
  const auto fs = factor(f);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace uga
