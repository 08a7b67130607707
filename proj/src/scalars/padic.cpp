#include "uga/scalars/padic.hpp"

#include <algorithm>

#include "uga/errors.hpp"

namespace uga {
namespace {

void check_prime_and_precision(std::uint32_t p, int precision) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (precision < 1)
    fail(ErrorKind::PrecisionExhausted, "p-adic precision must be at least one digit");
}

void check_same_prime(const PadicScalar& x, const PadicScalar& y) {
  if (x.prime() != y.prime())
    fail(ErrorKind::PrimeMismatch, "p-adic operands over different primes " +
                                       std::to_string(x.prime()) + " and " +
                                       std::to_string(y.prime()));
}

BigInt mod_positive(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

unsigned integer_valuation(const BigInt& n, std::uint32_t p) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "valuation of zero integer");
  unsigned v = 0;
  BigInt m = n;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

PadicScalar PadicScalar::zero(std::uint32_t p, int precision) {
  check_prime_and_precision(p, precision);
  return PadicScalar(p, precision);
}

PadicScalar PadicScalar::from_integer(std::uint32_t p, const BigInt& n, int precision) {
  check_prime_and_precision(p, precision);
  PadicScalar x(p, precision);
  if (n == 0) return x;
  const unsigned v = integer_valuation(n, p);
  const BigInt modulus = ipow(p, static_cast<unsigned>(precision));
  x.zero_ = false;
  x.valuation_ = v;
  x.unit_ = mod_positive(n / ipow(p, v), modulus);
  return x;
}

PadicScalar PadicScalar::from_rational(std::uint32_t p, const Rational& r, int precision) {
  check_prime_and_precision(p, precision);
  if (r == 0) return PadicScalar(p, precision);
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const unsigned vn = integer_valuation(num, p);
  const unsigned vd = integer_valuation(den, p);
  const BigInt modulus = ipow(p, static_cast<unsigned>(precision));
  const BigInt un = mod_positive(num / ipow(p, vn), modulus);
  const BigInt ud = den / ipow(p, vd);
  PadicScalar x(p, precision);
  x.zero_ = false;
  x.valuation_ = static_cast<std::int64_t>(vn) - static_cast<std::int64_t>(vd);
  x.unit_ = (un * inverse_mod(ud, modulus)) % modulus;
  return x;
}

PadicScalar PadicScalar::from_parts(std::uint32_t p, std::int64_t valuation, const BigInt& unit,
                                    int precision) {
  check_prime_and_precision(p, precision);
  const BigInt modulus = ipow(p, static_cast<unsigned>(precision));
  BigInt u = mod_positive(unit, modulus);
  if (u % p == 0)
    fail(ErrorKind::InvalidArgument, "unit part " + unit.str() + " is divisible by " +
                                         std::to_string(p));
  PadicScalar x(p, precision);
  x.zero_ = false;
  x.valuation_ = valuation;
  x.unit_ = std::move(u);
  return x;
}

std::optional<std::int64_t> PadicScalar::valuation() const noexcept {
  if (zero_) return std::nullopt;
  return valuation_;
}

Rational PadicScalar::norm() const {
  if (zero_) return Rational(0);
  return rational_power(p_, -valuation_);
}

PadicScalar PadicScalar::operator-() const {
  if (zero_) return *this;
  PadicScalar r = *this;
  r.unit_ = ipow(p_, static_cast<unsigned>(precision_)) - unit_;
  return r;
}

PadicScalar PadicScalar::inverse() const {
  if (zero_) fail(ErrorKind::DivisionByZero, "inverse of p-adic zero");
  PadicScalar r = *this;
  r.valuation_ = -valuation_;
  r.unit_ = inverse_mod(unit_, ipow(p_, static_cast<unsigned>(precision_)));
  return r;
}

PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
  check_same_prime(x, y);
  if (x.zero_) return y;
  if (y.zero_) return x;
  const std::uint32_t p = x.p_;
  const std::int64_t v = std::min(x.valuation_, y.valuation_);
  const std::int64_t abs_prec = std::min(x.absolute_precision(), y.absolute_precision());
  // abs_prec > v because both precisions are positive.
  const auto rel = static_cast<unsigned>(abs_prec - v);
  const BigInt modulus = ipow(p, rel);
  const auto shifted = [&](const PadicScalar& s) -> BigInt {
    const auto shift = s.valuation_ - v;
    if (shift >= static_cast<std::int64_t>(rel)) return BigInt(0);
    return s.unit_ * ipow(p, static_cast<unsigned>(shift));
  };
  BigInt sum = (shifted(x) + shifted(y)) % modulus;
  PadicScalar r(p, static_cast<int>(rel));
  if (sum == 0) {
    // Every known digit cancelled; the canonical zero stands in.
    r.precision_ = std::max(x.precision_, y.precision_);
    return r;
  }
  const unsigned lost = integer_valuation(sum, p);
  r.zero_ = false;
  r.valuation_ = v + lost;
  r.precision_ = static_cast<int>(rel - lost);
  r.unit_ = sum / ipow(p, lost);
  return r;
}

PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }

PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
  check_same_prime(x, y);
  const int prec = std::min(x.precision_, y.precision_);
  if (x.zero_ || y.zero_) return PadicScalar(x.p_, std::max(x.precision_, y.precision_));
  PadicScalar r(x.p_, prec);
  r.zero_ = false;
  r.valuation_ = x.valuation_ + y.valuation_;
  r.unit_ = (x.unit_ * y.unit_) % ipow(x.p_, static_cast<unsigned>(prec));
  return r;
}

PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
  check_same_prime(x, y);
  return x * y.inverse();
}

bool operator==(const PadicScalar& x, const PadicScalar& y) {
  if (x.p_ != y.p_) return false;
  if (x.zero_ || y.zero_) return x.zero_ == y.zero_;
  if (x.valuation_ != y.valuation_) return false;
  const BigInt modulus = ipow(x.p_, static_cast<unsigned>(std::min(x.precision_, y.precision_)));
  return x.unit_ % modulus == y.unit_ % modulus;
}

Rational PadicScalar::to_rational() const {
  if (zero_) return Rational(0);
  return Rational(unit_) * rational_power(p_, valuation_);
}

std::string PadicScalar::to_string() const {
  if (zero_) return "0";
  std::string s = unit_.str();
  if (valuation_ != 0) s += "*" + std::to_string(p_) + "^" + std::to_string(valuation_);
  return s + " + O(" + std::to_string(p_) + "^" + std::to_string(absolute_precision()) + ")";
}

}  // namespace uga
