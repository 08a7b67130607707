#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uga {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  PrimeMismatch,
  FieldMismatch,
  GroupMismatch,
  PrecisionExhausted,
  NegativeValuation,
  NormExceedsOne,
  NotIrreducible,
  BudgetExceeded,
  NotLeftIdeal,
  NotBaer,
  NotSemisimple,
  NeedsFieldExtension,
  NonSquareDimension,
  DimensionMismatch,
  NotDiagonalConstant,
  IdentityProbe,
  UnsupportedFamily,
  EmptyInput,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when an exhaustive scan would visit more than `budget` elements.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error(ErrorKind::BudgetExceeded,
              "enumeration needs " + std::to_string(required) +
                  " elements, budget is " + std::to_string(budget) +
                  " (rerun with a larger --budget or in sampling mode)"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// The requested splitting only exists over F_{q^degree}.
class NeedsFieldExtension : public Error {
 public:
  explicit NeedsFieldExtension(unsigned degree)
      : Error(ErrorKind::NeedsFieldExtension,
              "splitting requires a field extension of degree " +
                  std::to_string(degree)),
        degree_(degree) {}

  unsigned degree() const noexcept { return degree_; }

 private:
  unsigned degree_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace uga
