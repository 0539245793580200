#pragma once

#include <stdexcept>
#include <string>

namespace classcut {

enum class ErrorCode {
  Syntax,
  DuplicateMember,
  UnknownMember,
  KindMismatch,
  MalformedDocument,
  NonSquare,
  ValueOutOfRange,
  AsymmetricConflict,
  EmptyGraph,
  NoMethodsInTarget,
  NoFieldsInTarget,
  InvalidArgument,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Syntax errors carry the source position (1-based).
class SyntaxError : public Error {
public:
  SyntaxError(int line, int col, std::string message)
      : Error(ErrorCode::Syntax, "line " + std::to_string(line) + ", col " +
                                     std::to_string(col) + ": " + message),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

} // namespace classcut
