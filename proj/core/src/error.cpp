#include "rgp/error.hpp"

namespace rgp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownFlag: return "UnknownFlag";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DanglingHalfEdge: return "DanglingHalfEdge";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::OddIncidence: return "OddIncidence";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NoFlags: return "NoFlags";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HasFlags: return "HasFlags";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
  }
  return "Unknown";
}

}  // namespace rgp
