#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "uga/scalars/numeric.hpp"

namespace uga {

/// An element of Q_p carried at fixed relative precision.
///
/// A nonzero value is p^valuation * unit where unit is known modulo
/// p^precision and is coprime to p. Zero has no unit and valuation +inf.
/// Subtraction of nearby values loses leading digits; the lost digits are
/// subtracted from the precision of the result, so `precision()` always
/// reports the number of trustworthy digits.
class PadicScalar {
 public:
  static constexpr int kDefaultPrecision = 32;

  static PadicScalar zero(std::uint32_t p, int precision = kDefaultPrecision);
  static PadicScalar from_integer(std::uint32_t p, const BigInt& n,
                                  int precision = kDefaultPrecision);
  static PadicScalar from_rational(std::uint32_t p, const Rational& r,
                                   int precision = kDefaultPrecision);
  /// p^valuation * unit; `unit` must be coprime to p and is reduced mod p^precision.
  static PadicScalar from_parts(std::uint32_t p, std::int64_t valuation, const BigInt& unit,
                                int precision = kDefaultPrecision);

  std::uint32_t prime() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  bool is_zero() const noexcept { return zero_; }

  /// nullopt encodes +inf (the zero element).
  std::optional<std::int64_t> valuation() const noexcept;
  /// Unit part; zero for the zero element.
  const BigInt& unit() const noexcept { return unit_; }
  /// |x| = p^{-v}, exactly.
  Rational norm() const;

  /// Digits known in absolute terms: the value is determined modulo p^{v+N}.
  std::int64_t absolute_precision() const noexcept { return valuation_ + precision_; }

  PadicScalar operator-() const;
  PadicScalar inverse() const;

  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y);

  PadicScalar& operator+=(const PadicScalar& y) { return *this = *this + y; }
  PadicScalar& operator-=(const PadicScalar& y) { return *this = *this - y; }
  PadicScalar& operator*=(const PadicScalar& y) { return *this = *this * y; }

  /// Equality up to the smaller of the two relative precisions.
  friend bool operator==(const PadicScalar& x, const PadicScalar& y);

  /// Exact rational value of the stored digits (p^v * unit).
  Rational to_rational() const;
  std::string to_string() const;

 private:
  PadicScalar(std::uint32_t p, int precision) : p_(p), precision_(precision) {}

  std::uint32_t p_ = 2;
  int precision_ = kDefaultPrecision;
  bool zero_ = true;
  std::int64_t valuation_ = 0;
  BigInt unit_ = 0;
};

/// Q_p at a working precision; hands out scalars of that precision.
struct PadicField {
  using value_type = PadicScalar;

  std::uint32_t p = 5;
  int precision = PadicScalar::kDefaultPrecision;

  PadicScalar zero() const { return PadicScalar::zero(p, precision); }
  PadicScalar one() const { return from_int(1); }
  PadicScalar from_int(std::int64_t n) const {
    return PadicScalar::from_integer(p, BigInt(n), precision);
  }
  PadicScalar from_rational(const Rational& r) const {
    return PadicScalar::from_rational(p, r, precision);
  }
  bool is_zero(const PadicScalar& x) const { return x.is_zero(); }

  friend bool operator==(const PadicField&, const PadicField&) = default;
};

/// p-adic valuation of a nonzero integer.
unsigned integer_valuation(const BigInt& n, std::uint32_t p);

}  // namespace uga
