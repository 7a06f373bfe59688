#include "cayley/error.hpp"

namespace cayley {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpec: return "invalid-spec";
    case ErrorCode::kInvalidElement: return "invalid-element";
    case ErrorCode::kInvalidOrder: return "invalid-order";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kNotStronglyConnected: return "not-strongly-connected";
    case ErrorCode::kNoCertificate: return "no-certificate";
    case ErrorCode::kUndefinedAverage: return "undefined-average";
    case ErrorCode::kOutOfDomain: return "out-of-domain";
    case ErrorCode::kNoValidSet: return "no-valid-set";
    case ErrorCode::kNoGapExpected: return "no-gap-expected";
    case ErrorCode::kCertificationFailure: return "certification-failure";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace cayley
