#include "sylgen/budget.hpp"
#include "sylgen/error.hpp"

namespace sylgen
{

std::string_view error_kind_name(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DegreeCap: return "DegreeCap";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NoValidAlphas: return "NoValidAlphas";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::Uncovered: return "Uncovered";
    case ErrorKind::ConjugacyUndecided: return "ConjugacyUndecided";
    case ErrorKind::InequalityFails: return "InequalityFails";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::UnknownBound: return "UnknownBound";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Budgets const &default_budgets()
{
  static Budgets const budgets;
  return budgets;
}

} // namespace sylgen
