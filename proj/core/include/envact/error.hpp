#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace envact {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotHomomorphism,
  NotInjective,
  OutOfRange,
  BadPartition,
  MalformedTable,
  OpennessViolation,
  RelationNotEquivalence,
  MuIllDefined,
  NotABase,
  DoesNotSeparate,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the core library carries one of the codes above so
// front-ends can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace envact
