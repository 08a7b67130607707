#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace uga {

class FqElement;

/// The finite field F_{p^k} = F_p[x]/(modulus).
///
/// Elements are addressed by integer codes: the code of
/// c_0 + c_1 x + ... + c_{k-1} x^{k-1} is sum c_i p^i. Code 0 is zero and
/// code 1 is one. Copies share one immutable table set.
class FqField {
 public:
  using value_type = FqElement;
  using code_type = std::uint32_t;

  /// Largest order supported for proper extensions (log tables are kept).
  static constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

  static FqField prime(std::uint32_t p);
  /// F_{p^k} with the lowest irreducible monic modulus of degree k, ordered
  /// by the code of its lower coefficients. k = 1 gives the prime field.
  static FqField extension(std::uint32_t p, unsigned k);
  /// `modulus` is monic, little-endian; irreducibility is verified.
  static FqField with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint64_t order() const noexcept;
  /// Little-endian coefficients, length degree()+1, leading 1. Prime fields report x.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  code_type add(code_type a, code_type b) const;
  code_type sub(code_type a, code_type b) const;
  code_type neg(code_type a) const;
  code_type mul(code_type a, code_type b) const;
  code_type inv(code_type a) const;
  code_type pow(code_type a, std::uint64_t e) const;
  code_type frobenius(code_type a) const { return pow(a, characteristic()); }
  code_type code_of_int(std::int64_t n) const;

  std::vector<std::uint32_t> coefficients(code_type a) const;
  code_type code_of_coefficients(std::span<const std::uint32_t> coeffs) const;

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(std::int64_t n) const;
  FqElement element(code_type code) const;
  FqElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  /// The class of x; a generator of the field over F_p.
  FqElement generator() const;
  bool is_zero(const FqElement& a) const;
  FqElement inverse(const FqElement& a) const;

  std::string to_string() const;

  friend bool operator==(const FqField& a, const FqField& b);

  struct Impl;

 private:
  explicit FqField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

class FqElement {
 public:
  FqElement(FqField field, FqField::code_type code) : field_(std::move(field)), code_(code) {}

  const FqField& field() const noexcept { return field_; }
  FqField::code_type code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(code_); }

  FqElement operator-() const { return {field_, field_.neg(code_)}; }
  FqElement inverse() const { return {field_, field_.inv(code_)}; }
  FqElement pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
  FqElement frobenius() const { return {field_, field_.frobenius(code_)}; }

  friend FqElement operator+(const FqElement& a, const FqElement& b);
  friend FqElement operator-(const FqElement& a, const FqElement& b);
  friend FqElement operator*(const FqElement& a, const FqElement& b);
  friend FqElement operator/(const FqElement& a, const FqElement& b);
  FqElement& operator+=(const FqElement& b) { return *this = *this + b; }
  FqElement& operator-=(const FqElement& b) { return *this = *this - b; }
  FqElement& operator*=(const FqElement& b) { return *this = *this * b; }

  /// Same field and same code.
  friend bool operator==(const FqElement& a, const FqElement& b);

  /// "3" in a prime field, "[1,2]" (little-endian coefficients) otherwise.
  std::string to_string() const;

 private:
  FqField field_;
  FqField::code_type code_;
};

namespace detail {

// Dense polynomials over F_p, little-endian, used to vet moduli.
using PrimePoly = std::vector<std::uint32_t>;

bool is_irreducible_over_prime(const PrimePoly& f, std::uint32_t p);

}  // namespace detail

}  // namespace uga
