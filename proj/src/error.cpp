#include "maxtoll/error.hpp"

namespace maxtoll {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyNetwork: return "EmptyNetwork";
    case ErrorCode::NoTollFreePath: return "NoTollFreePath";
    case ErrorCode::DuplicateArcId: return "DuplicateArcId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSourceSink: return "NotSourceSink";
    case ErrorCode::NoTollArc: return "NoTollArc";
    case ErrorCode::NotValid: return "NotValid";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::MalformedClause: return "MalformedClause";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message, std::size_t line) {
  std::string out(to_string(code));
  if (line != 0) out += " (line " + std::to_string(line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line) {}

}  // namespace maxtoll
