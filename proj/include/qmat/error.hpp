#pragma once

#include <stdexcept>
#include <string>

namespace qmat {

// Error taxonomy shared by the library and the CLI. The CLI maps kinds to
// exit codes: math failures -> 1, usage -> 2, resource budgets -> 3.
enum class ErrorKind {
  DescriptorMismatch,
  InvalidValue,
  GP2Violation,
  AllZero,
  MorphismViolation,
  InfiniteCarrier,
  BudgetExceeded,
  ConditionViolated,
  NotSubrepresentation,
  NotNiceGrading,
  InvalidSequence,
  NotF1Linear,
  NotStrongMap,
  NotFound,
  Usage,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace qmat
