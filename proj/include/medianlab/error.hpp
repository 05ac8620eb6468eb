#pragma once

#include <stdexcept>
#include <string>

namespace medianlab {

enum class ErrorKind {
  Disconnected,
  SelfLoop,
  DuplicateEdge,
  SizeOverflow,
  InvalidParam,
  ParseError,
  NotMedian,
  TooManyHyperplanes,
  ModelMismatch,
  NonDyadicInput,
  NotEnumerable,
  CocycleInvalid,
  UnknownGenerator,
  BudgetExceeded,
  CapExceeded,
  Usage,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace medianlab
