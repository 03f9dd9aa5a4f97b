#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxtoll {

enum class ErrorCode {
  EmptyNetwork,
  NoTollFreePath,
  DuplicateArcId,
  DanglingEndpoint,
  NegativeCost,
  UnknownNode,
  UnknownArc,
  NotSimple,
  NotSourceSink,
  NoTollArc,
  NotValid,
  GuardExceeded,
  MalformedClause,
  SyntaxError,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every library failure surfaces as this exception. `line()` is non-zero
// only for diagnostics produced by the file parsers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace maxtoll
