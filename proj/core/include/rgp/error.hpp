#pragma once

#include <stdexcept>
#include <string>

namespace rgp {

enum class ErrorCode {
  InvalidMap,
  UnknownEdge,
  UnknownFlag,
  TooLarge,
  ParseError,
  DanglingHalfEdge,
  DuplicateId,
  OddIncidence,
  NotATree,
  NotACycle,
  NoFlags,
  NotConnected,
  HasFlags,
  MissingVariable,
  AssertionFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rgp
