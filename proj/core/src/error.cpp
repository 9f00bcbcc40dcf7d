#include "actforge/error.hpp"

namespace actforge {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::IdentityLawFails: return "IdentityLawFails";
    case ErrorKind::AssociativityFails: return "AssociativityFails";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::IdentityNotInU: return "IdentityNotInU";
    case ErrorKind::NotSubmonoid: return "NotSubmonoid";
    case ErrorKind::ComplementNotIdeal: return "ComplementNotIdeal";
    case ErrorKind::NotMonoidGeneratingSet: return "NotMonoidGeneratingSet";
    case ErrorKind::NotAPresentation: return "NotAPresentation";
    case ErrorKind::NotLeftZero: return "NotLeftZero";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DanglingReference: return "DanglingReference";
  }
  return "Unknown";
}

ActError::ActError(ErrorKind kind, const std::string& message,
                   std::vector<std::uint32_t> witness)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

int ActError::exit_code() const noexcept {
  switch (kind_) {
    case ErrorKind::VerificationFailed:
    case ErrorKind::HypothesisFails:
      return 1;
    case ErrorKind::SizeLimit:
      return 3;
    default:
      return 2;
  }
}

}  // namespace actforge
