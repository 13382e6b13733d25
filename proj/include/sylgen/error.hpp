#ifndef SYLGEN_ERROR_HPP
#define SYLGEN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sylgen
{

enum class ErrorKind
{
  NonPrime,
  SizeCap,
  Singular,
  DegreeCap,
  BudgetExceeded,
  NotSubgroup,
  UnsupportedSpec,
  NotInGroup,
  NoValidAlphas,
  NotSemisimple,
  NotDivisor,
  Uncovered,
  ConjugacyUndecided,
  InequalityFails,
  ConstructionFailed,
  DecompositionMismatch,
  UnknownBound,
  RangeViolation,
  BoundViolated,
  IoError,
  ChecksumMismatch,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
  : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
    _kind(kind)
  {}

  ErrorKind kind() const
  { return _kind; }

  // Caps and budgets, as opposed to logic or input errors.
  bool is_budget() const
  {
    return _kind == ErrorKind::BudgetExceeded || _kind == ErrorKind::DegreeCap ||
           _kind == ErrorKind::SizeCap;
  }

private:
  ErrorKind _kind;
};

} // namespace sylgen

#endif // SYLGEN_ERROR_HPP
