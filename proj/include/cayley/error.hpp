#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

enum class ErrorCode {
  kInvalidSpec,
  kInvalidElement,
  kInvalidOrder,
  kInvalidInput,
  kNotStronglyConnected,
  kNoCertificate,
  kUndefinedAverage,
  kOutOfDomain,
  kNoValidSet,
  kNoGapExpected,
  kCertificationFailure,
  kParse,
  kInternal,
};

const char* ToString(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cayley
