#ifndef ACTFORGE_ERROR_HPP
#define ACTFORGE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace actforge {

enum class ErrorKind {
  // structural validation
  NotAssociative,
  BadIdentity,
  OutOfRange,
  IdentityLawFails,
  AssociativityFails,
  // input contracts
  BaseMismatch,
  NotACongruence,
  NotGenerating,
  IdentityNotInU,
  NotSubmonoid,
  ComplementNotIdeal,
  NotMonoidGeneratingSet,
  NotAPresentation,
  NotLeftZero,
  BadArgument,
  // verification outcomes
  VerificationFailed,
  HypothesisFails,
  // resource limits
  SizeLimit,
  // workspace / serialization
  ParseError,
  ValidationError,
  DanglingReference,
};

const char* error_kind_name(ErrorKind kind);

// Single exception type for the whole library.  `witness()` carries the
// indices that exhibit the failure (e.g. the triple breaking associativity).
class ActError : public std::runtime_error {
 public:
  ActError(ErrorKind kind, const std::string& message,
           std::vector<std::uint32_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::uint32_t>& witness() const noexcept {
    return witness_;
  }

  // CLI exit code: 1 verification failure, 2 input error, 3 cap exceeded.
  int exit_code() const noexcept;

 private:
  ErrorKind kind_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace actforge

#endif  // ACTFORGE_ERROR_HPP
