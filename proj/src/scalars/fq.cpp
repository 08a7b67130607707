#include "uga/scalars/fq.hpp"

#include <algorithm>
#include <sstream>

#include "uga/errors.hpp"
#include "uga/scalars/numeric.hpp"

namespace uga {

namespace detail {
namespace {

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - mulmod(c, m[i], p)) % p);
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                      std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(prod), m, p);
}

PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint32_t p) {
  PrimePoly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return poly_mod(std::move(result), m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// Rabin's test: x^{p^k} = x mod f and gcd(x^{p^{k/r}} - x, f) = 1 for primes r | k.
bool is_irreducible_over_prime(const PrimePoly& f_in, std::uint32_t p) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const auto k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  // Frobenius iterates of x modulo f.
  std::vector<PrimePoly> iterates(k + 1);
  iterates[0] = poly_mod(PrimePoly{0, 1}, f, p);
  for (unsigned i = 1; i <= k; ++i) iterates[i] = poly_powmod(iterates[i - 1], p, f, p);
  const auto minus_x = [&](PrimePoly h) {
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(iterates[k]).empty()) return false;
  for (unsigned r : prime_divisors(k)) {
    const PrimePoly g = poly_gcd(f, minus_x(iterates[k / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

struct FqField::Impl {
  std::uint32_t p = 2;
  unsigned k = 1;
  std::uint64_t q = 2;
  std::vector<std::uint32_t> modulus;
  // Extension fields only: exp_table[i] = g^i, log_table[code] = i (log of 0 unused).
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> pow_p;  // p^i for i <= k

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, bool subtract) const {
    if (p == 2) return a ^ b;
    std::uint32_t result = 0;
    for (unsigned i = 0; i < k; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      const std::uint32_t d = subtract ? (da + p - db) % p : (da + db) % p;
      result += d * pow_p[i];
    }
    return result;
  }

  // Schoolbook product of two codes, used only while building the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    detail::PrimePoly pa(k), pb(k);
    for (unsigned i = 0; i < k; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p;
    for (unsigned d = 2 * k - 1; d >= k; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < k; ++i)
        prod[d - k + i] = (prod[d - k + i] + (p - modulus[i]) * c) % p;
    }
    std::uint32_t code = 0;
    for (unsigned i = 0; i < k; ++i) code += static_cast<std::uint32_t>(prod[i]) * pow_p[i];
    return code;
  }

  void build_tables() {
    const auto units = static_cast<std::uint32_t>(q - 1);
    exp_table.assign(units, 0);
    log_table.assign(q, 0);
    for (std::uint32_t g = 2; g < q; ++g) {
      std::uint32_t x = 1;
      std::uint32_t i = 0;
      bool primitive = true;
      for (; i < units; ++i) {
        if (i > 0 && x == 1) {
          primitive = false;
          break;
        }
        exp_table[i] = x;
        x = slow_mul(x, g);
      }
      if (primitive && x == 1) break;
    }
    for (std::uint32_t i = 0; i < units; ++i) log_table[exp_table[i]] = i;
  }
};

namespace {

std::shared_ptr<FqField::Impl> make_impl(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  auto impl = std::make_shared<FqField::Impl>();
  impl->p = p;
  impl->k = static_cast<unsigned>(modulus.size() - 1);
  impl->modulus = std::move(modulus);
  impl->q = 1;
  impl->pow_p.push_back(1);
  for (unsigned i = 0; i < impl->k; ++i) {
    impl->q *= p;
    impl->pow_p.push_back(static_cast<std::uint32_t>(std::min<std::uint64_t>(impl->q, UINT32_MAX)));
  }
  return impl;
}

}  // namespace

FqField FqField::prime(std::uint32_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (p > (1U << 31)) fail(ErrorKind::InvalidArgument, "prime too large for F_p codes");
  return FqField(make_impl(p, {0, 1}));
}

FqField FqField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  detail::trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    fail(ErrorKind::InvalidArgument, "field modulus must be monic of degree >= 1");
  if (modulus.size() == 2) return prime(p);
  if (!detail::is_irreducible_over_prime(modulus, p))
    fail(ErrorKind::NotIrreducible, "field modulus is reducible over F_" + std::to_string(p));
  long double order = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) order *= p;
  if (order > static_cast<long double>(kMaxExtensionOrder))
    fail(ErrorKind::InvalidArgument, "extension field order exceeds 2^20");
  auto impl = make_impl(p, std::move(modulus));
  impl->build_tables();
  return FqField(std::move(impl));
}

FqField FqField::extension(std::uint32_t p, unsigned k) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (k == 1) return prime(p);
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  long double order = 1;
  for (unsigned i = 0; i < k; ++i) order *= p;
  if (order > static_cast<long double>(kMaxExtensionOrder))
    fail(ErrorKind::InvalidArgument, "extension field order exceeds 2^20");
  const auto lower_count = static_cast<std::uint64_t>(order);
  for (std::uint64_t code = 0; code < lower_count; ++code) {
    std::vector<std::uint32_t> f(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (detail::is_irreducible_over_prime(f, p)) {
      auto impl = make_impl(p, std::move(f));
      impl->build_tables();
      return FqField(std::move(impl));
    }
  }
  fail(ErrorKind::NotIrreducible, "no irreducible polynomial found");  // unreachable
}

std::uint32_t FqField::characteristic() const noexcept { return impl_->p; }
unsigned FqField::degree() const noexcept { return impl_->k; }
std::uint64_t FqField::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& FqField::modulus() const noexcept { return impl_->modulus; }

FqField::code_type FqField::add(code_type a, code_type b) const {
  const auto& f = *impl_;
  if (f.k == 1) return static_cast<code_type>((std::uint64_t{a} + b) % f.p);
  return f.add_digits(a, b, false);
}

FqField::code_type FqField::sub(code_type a, code_type b) const {
  const auto& f = *impl_;
  if (f.k == 1) return static_cast<code_type>((std::uint64_t{a} + f.p - b) % f.p);
  return f.add_digits(a, b, true);
}

FqField::code_type FqField::neg(code_type a) const { return sub(0, a); }

FqField::code_type FqField::mul(code_type a, code_type b) const {
  const auto& f = *impl_;
  if (f.k == 1) return static_cast<code_type>(std::uint64_t{a} * b % f.p);
  if (a == 0 || b == 0) return 0;
  const std::uint64_t units = f.q - 1;
  return f.exp_table[(std::uint64_t{f.log_table[a]} + f.log_table[b]) % units];
}

FqField::code_type FqField::inv(code_type a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + to_string());
  const auto& f = *impl_;
  if (f.k == 1) return detail::invmod(a, f.p);
  const std::uint64_t units = f.q - 1;
  return f.exp_table[(units - f.log_table[a]) % units];
}

FqField::code_type FqField::pow(code_type a, std::uint64_t e) const {
  code_type result = 1, base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FqField::code_type FqField::code_of_int(std::int64_t n) const {
  const std::int64_t p = impl_->p;
  return static_cast<code_type>(((n % p) + p) % p);
}

std::vector<std::uint32_t> FqField::coefficients(code_type a) const {
  std::vector<std::uint32_t> out(impl_->k);
  for (auto& c : out) {
    c = a % impl_->p;
    a /= impl_->p;
  }
  return out;
}

FqField::code_type FqField::code_of_coefficients(std::span<const std::uint32_t> coeffs) const {
  const auto& f = *impl_;
  if (coeffs.size() > f.k) {
    for (std::size_t i = f.k; i < coeffs.size(); ++i)
      if (coeffs[i] % f.p != 0)
        fail(ErrorKind::InvalidArgument, "coefficient vector longer than field degree");
  }
  code_type code = 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(coeffs.size(), f.k); ++i)
    code += (coeffs[i] % f.p) * f.pow_p[i];
  return code;
}

FqElement FqField::zero() const { return {*this, 0}; }
FqElement FqField::one() const { return {*this, 1}; }
FqElement FqField::from_int(std::int64_t n) const { return {*this, code_of_int(n)}; }

FqElement FqField::element(code_type code) const {
  if (code >= impl_->q) fail(ErrorKind::InvalidArgument, "element code out of range");
  return {*this, code};
}

FqElement FqField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  return {*this, code_of_coefficients(coeffs)};
}

FqElement FqField::generator() const {
  if (impl_->k == 1) return one();
  return {*this, impl_->p};
}

bool FqField::is_zero(const FqElement& a) const { return a.is_zero(); }
FqElement FqField::inverse(const FqElement& a) const { return a.inverse(); }

std::string FqField::to_string() const {
  std::ostringstream os;
  os << "F_" << impl_->p;
  if (impl_->k > 1) {
    os << "^" << impl_->k << "[x]/(";
    bool first = true;
    for (std::size_t i = impl_->modulus.size(); i-- > 0;) {
      const auto c = impl_->modulus[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

bool operator==(const FqField& a, const FqField& b) {
  return a.impl_ == b.impl_ ||
         (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
}

namespace {

void check_same_field(const FqElement& a, const FqElement& b) {
  if (!(a.field() == b.field()))
    fail(ErrorKind::FieldMismatch,
         "operands in " + a.field().to_string() + " and " + b.field().to_string());
}

}  // namespace

FqElement operator+(const FqElement& a, const FqElement& b) {
  check_same_field(a, b);
  return {a.field_, a.field_.add(a.code_, b.code_)};
}

FqElement operator-(const FqElement& a, const FqElement& b) {
  check_same_field(a, b);
  return {a.field_, a.field_.sub(a.code_, b.code_)};
}

FqElement operator*(const FqElement& a, const FqElement& b) {
  check_same_field(a, b);
  return {a.field_, a.field_.mul(a.code_, b.code_)};
}

FqElement operator/(const FqElement& a, const FqElement& b) {
  check_same_field(a, b);
  return {a.field_, a.field_.mul(a.code_, a.field_.inv(b.code_))};
}

bool operator==(const FqElement& a, const FqElement& b) {
  return a.code_ == b.code_ && a.field_ == b.field_;
}

std::string FqElement::to_string() const {
  if (field_.degree() == 1) return std::to_string(code_);
  std::string s = "[";
  const auto cs = coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(cs[i]);
  }
  return s + "]";
}

}  // namespace uga
