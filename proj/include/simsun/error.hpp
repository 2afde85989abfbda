#pragma once

#include <stdexcept>
#include <string>

namespace simsun {

// Every domain failure in the library is reported as an Error carrying one of
// these codes. The C API maps them one-to-one onto simsun_status values.
enum class ErrorCode {
  InvalidArgument,
  ParseError,
  InvalidWord,
  EmptyPermutation,
  InvalidK,
  NotInTree,
  NotAvoiding,
  NotInDomain,
  InvalidPath,
  InvalidSequence,
  InvalidIndex,
  IllPosed,
  NotTabulated,
  OutOfStatedRange,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simsun
