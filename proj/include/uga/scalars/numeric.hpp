#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace uga {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(std::uint64_t base, unsigned exponent);

// p^e for any integer e, as an exact rational.
Rational rational_power(std::uint64_t p, std::int64_t e);

// Inverse of a modulo m; requires gcd(a, m) = 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

bool is_prime(std::uint64_t n);

// "a/b" or "a" in lowest terms.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Exact rational scalars; used where rank decisions must not lose digits.
struct RationalField {
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  bool is_zero(const Rational& x) const { return x == 0; }
  Rational inverse(const Rational& x) const;

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

}  // namespace uga
