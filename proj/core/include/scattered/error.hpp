#ifndef SCATTERED_ERROR_HPP
#define SCATTERED_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace scattered {

enum class ErrorKind {
  DivisionByZero,
  NotInSubfield,
  BadCharacteristic,
  BadSubfieldIndex,
  OddCharRequired,
  EvenCharRequired,
  ZeroLeadingCoefficient,
  IndexOutOfRange,
  EnumerationTooLarge,
  NonSubspaceKernel,
  BadIndex,
  ZeroB,
  ZeroInput,
  PreconditionUnmet,
  OracleDisagreement,
  NotPrimePower,
  ConstraintViolated,
  NotClosed,
  NormOne,
  TooLargeForExhaustive,
  InvalidFieldSpec,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the core library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace scattered

#endif  // SCATTERED_ERROR_HPP
