#pragma once

#include <stdexcept>
#include <string>

namespace safeset {

// Every failure the library reports carries one of these kinds so callers
// (and the CLI exit-code mapping) can dispatch without string matching.
enum class ErrorKind {
  Disconnected,
  Cyclic,
  BadVertexId,
  NegativeWeight,
  WeightOverflow,
  BadRange,
  InstanceTooLarge,
  BudgetOverflow,
  CapTooLarge,
  NotExtensible,
  NotConnected,
  NotBlockGraph,
  SearchStalled,
  PreconditionViolated,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors additionally carry the 1-based input line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace safeset
