#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uga/scalars/fq.hpp"

namespace uga {

/// Dense univariate polynomial over F_q, little-endian, no trailing zeros.
class FqPolynomial {
 public:
  using code_type = FqField::code_type;

  explicit FqPolynomial(FqField field) : field_(std::move(field)) {}
  FqPolynomial(FqField field, std::vector<code_type> coeffs);
  FqPolynomial(FqField field, const std::vector<FqElement>& coeffs);

  static FqPolynomial monomial(const FqField& field, std::size_t degree, code_type coeff = 1);
  static FqPolynomial constant(const FqField& field, code_type c);
  /// x - root.
  static FqPolynomial linear(const FqField& field, code_type root);

  const FqField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<code_type>& codes() const noexcept { return coeffs_; }
  code_type code(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FqElement coefficient(std::size_t i) const { return field_.element(code(i)); }
  code_type leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return leading() == 1; }

  FqPolynomial monic() const;
  FqPolynomial derivative() const;
  code_type evaluate(code_type x) const;

  friend FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator%(const FqPolynomial& a, const FqPolynomial& b);
  friend FqPolynomial operator/(const FqPolynomial& a, const FqPolynomial& b);
  FqPolynomial scaled(code_type c) const;

  friend bool operator==(const FqPolynomial& a, const FqPolynomial& b);
  /// Degree first, then coefficients from the top down.
  friend bool operator<(const FqPolynomial& a, const FqPolynomial& b);

  std::string to_string() const;

 private:
  void normalize();

  FqField field_;
  std::vector<code_type> coeffs_;
};

std::pair<FqPolynomial, FqPolynomial> divmod(const FqPolynomial& a, const FqPolynomial& b);
/// Monic gcd; zero when both inputs are zero.
FqPolynomial gcd(const FqPolynomial& a, const FqPolynomial& b);
/// (g, s, t) with s a + t b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  FqPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const FqPolynomial& a, const FqPolynomial& b);
FqPolynomial powmod(const FqPolynomial& base, std::uint64_t e, const FqPolynomial& modulus);

struct Factor {
  FqPolynomial poly;
  unsigned multiplicity;
};

/// Complete factorization into monic irreducibles (deterministic Berlekamp).
/// The product of poly^multiplicity over the result equals f.monic().
/// Factors are sorted by degree, then coefficients.
std::vector<Factor> factor(const FqPolynomial& f);

bool is_irreducible(const FqPolynomial& f);

}  // namespace uga
