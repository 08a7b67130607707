#include "uga/scalars/numeric.hpp"

#include "uga/errors.hpp"

namespace uga {

BigInt ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

Rational rational_power(std::uint64_t p, std::int64_t e) {
  if (e >= 0) return Rational(ipow(p, static_cast<unsigned>(e)));
  return Rational(BigInt(1), ipow(p, static_cast<unsigned>(-e)));
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(ErrorKind::DivisionByZero, "value is not invertible modulo " + m.str());
  BigInt inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    fail(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
  }
}

Rational RationalField::inverse(const Rational& x) const {
  if (x == 0) fail(ErrorKind::DivisionByZero, "inverse of zero rational");
  return 1 / x;
}

}  // namespace uga
