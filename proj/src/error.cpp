#include "simsun/error.hpp"

namespace simsun {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::EmptyPermutation: return "EmptyPermutation";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::NotInTree: return "NotInTree";
    case ErrorCode::NotAvoiding: return "NotAvoiding";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::IllPosed: return "IllPosed";
    case ErrorCode::NotTabulated: return "NotTabulated";
    case ErrorCode::OutOfStatedRange: return "OutOfStatedRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace simsun
