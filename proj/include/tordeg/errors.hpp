#pragma once

#include <stdexcept>
#include <string>

namespace tordeg {

enum class ErrorKind {
  EmptyCone,
  NotHomogeneous,
  CellBudgetExceeded,
  DimensionMismatch,
  ItemNotClosed,
  NotBinomialAfterSaturation,
  RescalingObstruction,
  Unbounded,
  GradingMismatch,
  NotReduced,
  NonDominant,
  Unreachable,
  NoneMissing,
  NoPrimeLift,
  InvalidInput,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace tordeg
