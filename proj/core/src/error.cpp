#include "bsym/error.hpp"

namespace bsym {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ModulusNotIrreducible: return "ModulusNotIrreducible";
    case ErrorKind::ModulusNotPrimitive: return "ModulusNotPrimitive";
    case ErrorKind::TableLimitExceeded: return "TableLimitExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::LogOfZero: return "LogOfZero";
    case ErrorKind::DegreeNotDivisor: return "DegreeNotDivisor";
    case ErrorKind::OrderNotDivisor: return "OrderNotDivisor";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NoClosedFormCase: return "NoClosedFormCase";
    case ErrorKind::BOutOfRange: return "BOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotSubfield: return "NotSubfield";
    case ErrorKind::NNotDivisor: return "NNotDivisor";
    case ErrorKind::GcdViolation: return "GcdViolation";
    case ErrorKind::EnumerationLimitExceeded: return "EnumerationLimitExceeded";
    case ErrorKind::ClassConstancyViolated: return "ClassConstancyViolated";
    case ErrorKind::NonRationalCombination: return "NonRationalCombination";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::NoTheoremApplies: return "NoTheoremApplies";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::SubspaceLimitExceeded: return "SubspaceLimitExceeded";
    case ErrorKind::CaseNotCovered: return "CaseNotCovered";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotCodeword: return "NotCodeword";
  }
  return "Unknown";
}

}  // namespace bsym
