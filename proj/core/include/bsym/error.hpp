#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsym {

enum class ErrorKind {
  NotPrime,
  ModulusNotIrreducible,
  ModulusNotPrimitive,
  TableLimitExceeded,
  InvalidArgument,
  DivisionByZero,
  FieldMismatch,
  LogOfZero,
  DegreeNotDivisor,
  OrderNotDivisor,
  IndexOutOfRange,
  NoClosedFormCase,
  BOutOfRange,
  LengthMismatch,
  NotSubfield,
  NNotDivisor,
  GcdViolation,
  EnumerationLimitExceeded,
  ClassConstancyViolated,
  NonRationalCombination,
  WeightOutOfRange,
  NoTheoremApplies,
  HypothesisViolated,
  SubspaceLimitExceeded,
  CaseNotCovered,
  RankDeficient,
  NotCodeword,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and tests) can branch on the cause without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace bsym
