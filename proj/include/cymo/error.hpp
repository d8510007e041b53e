#pragma once

#include <stdexcept>
#include <string>

namespace cymo {

// Error taxonomy shared with the C API status codes (see cymo.h).
enum class ErrorCode {
  InvalidArgument = 1,
  ParseError = 2,
  NumericFailure = 3,
  DegreeTooSmall = 4,
  NotJordanInput = 5,
  AmbiguousSpectrum = 6,
  EmptyQuotient = 7,
  DimensionMismatch = 8,
  Internal = 9,
  NonCommuting = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace cymo
